#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Cone order marker for infinite local monodromy; 1/inf counts as 0.
inline constexpr int kInfiniteOrder = -1;

inline bool valid_cone_order(int p) { return p == kInfiniteOrder || p >= 2; }

// Genus plus a multiset of cone orders. Orders are kept in the order given;
// canonical() sorts finite ascending with infinite last.
struct OrbifoldSignature {
    int genus = 0;
    std::vector<int> cone_orders;

    static OrbifoldSignature make(int genus, std::vector<int> orders) {
        if (genus < 0) throw std::invalid_argument("negative genus");
        for (int p : orders)
            if (!valid_cone_order(p))
                throw std::invalid_argument("cone order must be >= 2 or infinite");
        return OrbifoldSignature{genus, std::move(orders)};
    }

    OrbifoldSignature canonical() const {
        OrbifoldSignature s = *this;
        std::sort(s.cone_orders.begin(), s.cone_orders.end(), [](int a, int b) {
            if (a == kInfiniteOrder) return false;
            if (b == kInfiniteOrder) return true;
            return a < b;
        });
        return s;
    }

    friend bool operator==(const OrbifoldSignature& a, const OrbifoldSignature& b) {
        return a.genus == b.genus && a.cone_orders == b.cone_orders;
    }

    std::string str() const {
        std::string s = "(" + std::to_string(genus) + "; ";
        if (cone_orders.empty()) s += "-";
        for (std::size_t i = 0; i < cone_orders.size(); ++i) {
            if (i) s += ",";
            s += cone_orders[i] == kInfiniteOrder ? std::string("inf")
                                                  : std::to_string(cone_orders[i]);
        }
        return s + ")";
    }
};

// chi = 2 - 2g + sum(1/p_i - 1), with 1/inf = 0.
inline Rat euler_characteristic(const OrbifoldSignature& sig) {
    Rat chi(2 - 2 * sig.genus);
    for (int p : sig.cone_orders) {
        if (p == kInfiniteOrder)
            chi -= 1;
        else
            chi += Rat(1, p) - 1;
    }
    return chi;
}

enum class GeometryClass { Spherical, Euclidean, Hyperbolic };

inline GeometryClass geometry_class(const OrbifoldSignature& sig) {
    Rat chi = euler_characteristic(sig);
    if (chi > 0) return GeometryClass::Spherical;
    if (chi == 0) return GeometryClass::Euclidean;
    return GeometryClass::Hyperbolic;
}

inline const char* geometry_name(GeometryClass g) {
    switch (g) {
        case GeometryClass::Spherical: return "spherical";
        case GeometryClass::Euclidean: return "euclidean";
        default: return "hyperbolic";
    }
}

// Branch excess bound b = 2 + d*chi for a degree-d cover whose pullback has
// only apparent singularities. Exact rational; integrality is the caller's
// admissibility filter.
inline Rat branch_excess(const OrbifoldSignature& sig, long d) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    return Rat(2) + Rat(d) * euler_characteristic(sig);
}

// One partition of d per branch point. `point` < cone count refers to that
// cone point; `point` >= cone count denotes a free (order-1) branch point.
struct BranchPartition {
    int point = 0;
    std::vector<int> parts;
};

struct PullbackEntry {
    int point;       // base point index as above
    int base_order;  // p (1 for free points, kInfiniteOrder possible)
    int e;           // local ramification order
    Rat ratio;       // pulled-back inverse order e/p (0 when p infinite)
};

struct PullbackReport {
    long degree = 0;
    int base_genus = 0;
    std::vector<PullbackEntry> entries;
    bool apparent = false;
    std::optional<Rat> excess;  // b; empty when an infinite cone order is involved

    // Genus a connected cover realizing exactly this branch data would have;
    // empty when Riemann-Hurwitz parity rules such a cover out (e.g. branch
    // data given without its free transposition).
    std::optional<int> genus_if_consistent() const {
        long ram = 0;
        for (const auto& en : entries) ram += en.e - 1;
        long two_minus = (2 - 2 * base_genus) * degree - ram;
        if (two_minus % 2 != 0 || two_minus > 2) return std::nullopt;
        return static_cast<int>((2 - two_minus) / 2);
    }

    // Effective orbifold Euler characteristic upstairs, for a given cover
    // genus (normally constellation-derived or genus_if_consistent()).
    Rat chi_cover(int cover_genus) const {
        Rat chi(2 - 2 * cover_genus);
        for (const auto& en : entries) chi += en.ratio - 1;
        return chi;
    }

    // Cone orders upstairs at the points whose pulled-back inverse order is
    // not a positive integer. Requires every such ratio to have unit
    // numerator 1/q (residual cone order q); otherwise throws.
    std::vector<int> residual_orders() const {
        std::vector<int> orders;
        for (const auto& en : entries) {
            if (en.base_order == kInfiniteOrder) {
                orders.push_back(kInfiniteOrder);
                continue;
            }
            if (is_integer(en.ratio) && en.ratio >= 1) continue;
            if (rat_num(en.ratio) != 1)
                throw std::domain_error("residual inverse order " + rat_str(en.ratio) +
                                        " is not of the form 1/q");
            orders.push_back(static_cast<int>(rat_den(en.ratio)));
        }
        std::sort(orders.begin(), orders.end(), [](int a, int b) {
            if (a == kInfiniteOrder) return false;
            if (b == kInfiniteOrder) return true;
            return a < b;
        });
        return orders;
    }

    OrbifoldSignature residual_signature(int cover_genus) const {
        return OrbifoldSignature::make(cover_genus, residual_orders());
    }
};

inline PullbackReport pullback_orbifold(const OrbifoldSignature& sig,
                                        const std::vector<BranchPartition>& ramification,
                                        long d) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    const int n = static_cast<int>(sig.cone_orders.size());

    std::vector<const BranchPartition*> at_cone(n, nullptr);
    std::vector<const BranchPartition*> free_points;
    std::vector<int> seen;
    for (const auto& bp : ramification) {
        if (bp.point < 0) throw std::invalid_argument("negative point index");
        if (std::find(seen.begin(), seen.end(), bp.point) != seen.end())
            throw std::invalid_argument("duplicate point index in ramification data");
        seen.push_back(bp.point);
        long sum = 0;
        for (int e : bp.parts) {
            if (e < 1) throw std::invalid_argument("partition parts must be positive");
            sum += e;
        }
        if (sum != d)
            throw std::invalid_argument("partition does not sum to the degree at point " +
                                        std::to_string(bp.point));
        if (bp.point < n)
            at_cone[bp.point] = &bp;
        else
            free_points.push_back(&bp);
    }

    PullbackReport rep;
    rep.degree = d;
    rep.base_genus = sig.genus;
    bool has_infinite = false;

    auto push_entries = [&](int point, int p, const std::vector<int>& parts) {
        for (int e : parts) {
            Rat ratio = (p == kInfiniteOrder) ? Rat(0) : Rat(e, p);
            rep.entries.push_back({point, p, e, ratio});
        }
    };

    std::vector<int> trivial(static_cast<std::size_t>(d), 1);
    for (int i = 0; i < n; ++i) {
        int p = sig.cone_orders[i];
        if (p == kInfiniteOrder) has_infinite = true;
        push_entries(i, p, at_cone[i] ? at_cone[i]->parts : trivial);
    }
    for (const auto* bp : free_points) push_entries(bp->point, 1, bp->parts);

    rep.apparent = true;
    for (const auto& en : rep.entries)
        if (!(is_integer(en.ratio) && en.ratio >= 1)) rep.apparent = false;

    if (!has_infinite) {
        Rat b(0);
        for (const auto& en : rep.entries)
            if (is_integer(en.ratio) && en.ratio >= 1) b += en.ratio - 1;
        rep.excess = b;
    }
    return rep;
}

}  // namespace hurwitz
