#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Fixed variable universe for all multivariate work. Order matters: it is the
// lexicographic order used for leading terms and printing.
enum class Var : int { X = 0, Y = 1, x1 = 2, y1 = 3, xt = 4, yt = 5, z = 6 };

inline constexpr int kNumVars = 7;

inline const char* var_name(Var v) {
    static const char* names[kNumVars] = {"X", "Y", "x1", "y1", "xt", "yt", "z"};
    return names[static_cast<int>(v)];
}

using Exp = std::array<std::uint16_t, kNumVars>;

// Sparse polynomial over Q. Invariant: no stored zero coefficients, so the
// zero polynomial has an empty term map and operator== is structural.
class MPoly {
public:
    std::map<Exp, Rat> terms;

    MPoly() = default;
    explicit MPoly(const Rat& c) {
        if (c != 0) terms.emplace(Exp{}, c);
    }
    explicit MPoly(long c) : MPoly(Rat(c)) {}

    static MPoly variable(Var v, unsigned e = 1) {
        MPoly p;
        if (e == 0) return MPoly(Rat(1));
        Exp ex{};
        ex[static_cast<int>(v)] = static_cast<std::uint16_t>(e);
        p.terms.emplace(ex, Rat(1));
        return p;
    }

    static MPoly monomial(const Exp& e, const Rat& c) {
        MPoly p;
        if (c != 0) p.terms.emplace(e, c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first == Exp{});
    }

    Rat constant_value() const {
        if (terms.empty()) return Rat(0);
        if (!is_constant()) throw std::domain_error("constant_value on non-constant polynomial");
        return terms.begin()->second;
    }

    int degree(Var v) const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, static_cast<int>(e[static_cast<int>(v)]));
        return terms.empty() ? -1 : d;
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.terms) add_term(e, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator-(const MPoly& a) {
        MPoly r;
        for (const auto& [e, c] : a.terms) r.terms.emplace(e, -c);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                Exp e;
                for (int i = 0; i < kNumVars; ++i) {
                    unsigned s = static_cast<unsigned>(ea[i]) + eb[i];
                    if (s > 0xFFFF) throw std::overflow_error("exponent overflow");
                    e[i] = static_cast<std::uint16_t>(s);
                }
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend MPoly operator*(const MPoly& a, const Rat& c) {
        MPoly r;
        if (c == 0) return r;
        for (const auto& [e, k] : a.terms) r.terms.emplace(e, k * c);
        return r;
    }
    friend MPoly operator*(const Rat& c, const MPoly& a) { return a * c; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned n) const {
        MPoly r(Rat(1));
        MPoly base = *this;
        while (n) {
            if (n & 1u) r = r * base;
            base = n > 1 ? base * base : base;
            n >>= 1u;
        }
        return r;
    }

    // Coefficients of powers of v, each itself a polynomial free of v.
    std::map<unsigned, MPoly> coeffs_in(Var v) const {
        std::map<unsigned, MPoly> out;
        int iv = static_cast<int>(v);
        for (const auto& [e, c] : terms) {
            Exp e2 = e;
            unsigned k = e2[iv];
            e2[iv] = 0;
            out[k].add_term(e2, c);
        }
        return out;
    }

    MPoly coeff_of(Var v, unsigned k) const {
        MPoly out;
        int iv = static_cast<int>(v);
        for (const auto& [e, c] : terms) {
            if (e[iv] != k) continue;
            Exp e2 = e;
            e2[iv] = 0;
            out.add_term(e2, c);
        }
        return out;
    }

    MPoly subst(Var v, const MPoly& value) const {
        auto cs = coeffs_in(v);
        MPoly r;
        MPoly p(Rat(1));
        unsigned cur = 0;
        for (const auto& [k, c] : cs) {
            while (cur < k) {
                p = p * value;
                ++cur;
            }
            r += c * p;
        }
        return r;
    }

    MPoly subst(Var v, const Rat& value) const { return subst(v, MPoly(value)); }

    // Full evaluation; every variable present in the polynomial must be given.
    Rat eval(const std::map<Var, Rat>& point) const {
        MPoly p = *this;
        for (const auto& [v, val] : point) p = p.subst(v, val);
        if (!p.is_constant()) throw std::domain_error("eval left free variables");
        return p.constant_value();
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string s;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            const Rat& c = it->second;
            bool neg = c < 0;
            Rat a = neg ? Rat(-c) : c;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            std::string mono;
            for (int i = 0; i < kNumVars; ++i) {
                if (it->first[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_name(static_cast<Var>(i));
                if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
            }
            if (mono.empty())
                s += rat_str(a);
            else if (a == 1)
                s += mono;
            else
                s += rat_str(a) + "*" + mono;
        }
        return s;
    }

private:
    void add_term(const Exp& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

// Exact division; throws std::domain_error when b does not divide a.
// Works by cancelling lexicographic leading terms, which is sound because
// lead(q*b) = lead(q)*lead(b) in lex order.
inline MPoly divexact(MPoly a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    MPoly q;
    const auto& lb = *b.terms.rbegin();
    while (!a.is_zero()) {
        const auto& la = *a.terms.rbegin();
        Exp e;
        for (int i = 0; i < kNumVars; ++i) {
            if (la.first[i] < lb.first[i]) throw std::domain_error("inexact polynomial division");
            e[i] = static_cast<std::uint16_t>(la.first[i] - lb.first[i]);
        }
        MPoly t = MPoly::monomial(e, la.second / lb.second);
        q += t;
        a -= t * b;
    }
    return q;
}

// Quadratic ring relation v^2 = rhs. The supported shape requires every rhs
// to be free of every relation variable; reduce() checks this and throws.
struct RingRelation {
    Var v;
    MPoly rhs;
};

inline void check_relations(const std::vector<RingRelation>& rels) {
    for (std::size_t i = 0; i < rels.size(); ++i) {
        for (std::size_t j = i + 1; j < rels.size(); ++j)
            if (rels[i].v == rels[j].v)
                throw std::domain_error("duplicate relation variable");
        for (const auto& r : rels)
            if (rels[i].rhs.degree(r.v) > 0)
                throw std::domain_error(std::string("relation rhs mentions relation variable ") +
                                        var_name(r.v));
    }
}

// Canonical form modulo the ideal (v^2 - rhs, ...): rewrites v^k as
// rhs^(k/2) * v^(k mod 2), leaving degree <= 1 in each relation variable.
inline MPoly reduce(const MPoly& p, const std::vector<RingRelation>& rels) {
    check_relations(rels);
    MPoly cur = p;
    for (const auto& rel : rels) {
        auto cs = cur.coeffs_in(rel.v);
        MPoly next;
        for (const auto& [k, c] : cs) {
            MPoly t = c * rel.rhs.pow(k / 2);
            if (k % 2) t = t * MPoly::variable(rel.v);
            next += t;
        }
        cur = next;
    }
    return cur;
}

}  // namespace hurwitz
