#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "hurwitz/orbifold.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// One classification row: a base orbifold, a covering degree, the totally
// ramified profile over each cone point (all parts equal to the cone order),
// and the number of free simple branch points (always 1 here: the deformation
// parameter).
struct TableRow {
    OrbifoldSignature signature;
    long degree = 0;
    std::vector<std::vector<int>> profiles;
    long free_branch = 0;
};

// Hyperbolic triples p0 <= p1 <= p_inf satisfying
//   (1 - 1/p0 - 1/p1) * p_inf <= 2   and   1/3 <= 1/p0 + 1/p1 < 1.
// Loop bounds below are consequences: p1 >= p0 and 1/p0+1/p1 >= 1/3 give
// p0 <= 6; a p_inf >= p1 with (1-1/p0-1/p1)p_inf <= 2 requires
// (1-1/p0-1/p1)p1 <= 2, which bounds p1.
inline std::vector<std::array<int, 3>> candidate_triples() {
    std::vector<std::array<int, 3>> out;
    for (int p0 = 2; p0 <= 6; ++p0) {
        for (int p1 = p0;; ++p1) {
            Rat a = Rat(1, p0) + Rat(1, p1);
            if (a < Rat(1, 3)) break;            // decreasing in p1, stays below
            if ((Rat(1) - a) * p1 > 2) break;    // (1-a)p_inf >= (1-a)p1, increasing in p1
            if (a >= 1) continue;                // not hyperbolic for any p_inf
            for (int pi = p1;; ++pi) {
                if ((Rat(1) - a) * pi > 2) break;
                if (a + Rat(1, pi) < 1) out.push_back({p0, p1, pi});
            }
        }
    }
    // p0-major enumeration is already lexicographic
    return out;
}

inline TableRow totally_ramified_row(const OrbifoldSignature& sig, long d) {
    TableRow row;
    row.signature = sig;
    row.degree = d;
    for (int p : sig.cone_orders)
        row.profiles.emplace_back(static_cast<std::size_t>(d / p), p);
    Rat b = branch_excess(sig, d);
    if (!is_integer(b)) throw std::domain_error("non-integral branch excess");
    row.free_branch = static_cast<long>(rat_floor(b));
    return row;
}

// Triples that pass the degree test: d = 1/(1 - sum 1/p_i) is a positive
// integer divisible by every p_i (total ramification at each cone point).
inline bool hypergeometric_degree(const std::array<int, 3>& t, long& d_out) {
    Rat gap = Rat(1) - Rat(1, t[0]) - Rat(1, t[1]) - Rat(1, t[2]);
    if (gap <= 0) return false;
    Rat d = Rat(1) / gap;
    if (!is_integer(d)) return false;
    long dd = static_cast<long>(rat_floor(d));
    for (int p : t)
        if (dd % p != 0) return false;
    d_out = dd;
    return true;
}

inline std::vector<TableRow> table_hypergeometric() {
    std::vector<TableRow> rows;
    for (const auto& t : candidate_triples()) {
        long d = 0;
        if (!hypergeometric_degree(t, d)) continue;
        rows.push_back(totally_ramified_row(
            OrbifoldSignature::make(0, {t[0], t[1], t[2]}), d));
    }
    return rows;
}

inline std::vector<std::array<int, 3>> rejected_triples() {
    std::vector<std::array<int, 3>> out;
    for (const auto& t : candidate_triples()) {
        long d = 0;
        if (!hypergeometric_degree(t, d)) out.push_back(t);
    }
    return out;
}

// Exhaustive scan for the non-hypergeometric admissible data: signatures
// (g; p_1..p_n), excluding genus-0 triangle data, whose Euler characteristic
// equals -1/d for an integer d >= 1 divisible by every cone order. Scan
// bounds: genus <= 2, cone orders <= 64, and a branch cut at chi < -1 (valid
// since -chi = 1/d <= 1 and adding cone points only lowers chi). The
// admissible set turns out to lie well inside these bounds.
inline std::vector<TableRow> table_general() {
    std::vector<TableRow> rows;
    constexpr int kMaxOrder = 64;
    std::vector<int> orders;

    auto emit_if_row = [&](int genus, const Rat& chi) {
        if (genus == 0 && orders.size() == 3) return;  // hypergeometric case
        if (chi >= 0) return;
        Rat d = Rat(-1) / chi;
        if (!is_integer(d)) return;
        long dd = static_cast<long>(rat_floor(d));
        for (int p : orders)
            if (dd % p != 0) return;
        rows.push_back(totally_ramified_row(OrbifoldSignature::make(genus, orders), dd));
    };

    // chi is maintained incrementally; each cone point of order p lowers it
    // by 1 - 1/p, which grows with p, so the child loop may break early.
    auto scan = [&](auto&& self, int genus, int min_order, const Rat& chi) -> void {
        emit_if_row(genus, chi);
        for (int p = min_order; p <= kMaxOrder; ++p) {
            Rat step = Rat(1) - Rat(1, p);
            if (step > chi + 1) break;  // child would have chi < -1 = min(-1/d)
            orders.push_back(p);
            self(self, genus, p, chi - step);
            orders.pop_back();
        }
    };
    for (int genus = 0; genus <= 2; ++genus) {
        orders.clear();
        Rat chi0(2 - 2 * genus);
        if (chi0 < -1) continue;
        scan(scan, genus, 2, chi0);
    }

    std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
        if (a.signature.genus != b.signature.genus) return a.signature.genus < b.signature.genus;
        if (a.signature.cone_orders.size() != b.signature.cone_orders.size())
            return a.signature.cone_orders.size() < b.signature.cone_orders.size();
        return a.signature.cone_orders < b.signature.cone_orders;
    });
    return rows;
}

// Compact "2^21" run-length rendering of a profile partition.
inline std::string profile_str(const std::vector<int>& parts) {
    std::string s;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!s.empty()) s += "+";
        s += std::to_string(parts[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s.empty() ? "-" : s;
}

inline std::string row_str(const TableRow& row) {
    std::string s = row.signature.str() + "  d=" + std::to_string(row.degree) + "  (";
    for (std::size_t i = 0; i < row.profiles.size(); ++i) {
        if (i) s += " ; ";
        s += profile_str(row.profiles[i]);
    }
    s += ")  free=" + std::to_string(row.free_branch);
    return s;
}

inline std::string render_rows_text(const std::vector<TableRow>& rows) {
    std::string s;
    for (const auto& r : rows) s += row_str(r) + "\n";
    return s;
}

}  // namespace hurwitz
