#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/quadext.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Dense univariate polynomial over an exact field K (Rat or QuadExt).
// Coefficients ascending; invariant: no trailing zero, so zero poly is empty.
template <class K>
class UPoly {
public:
    std::vector<K> c;

    UPoly() = default;
    UPoly(std::initializer_list<K> init) : c(init) { trim(); }
    static UPoly from_coeffs(std::vector<K> v) {
        UPoly p;
        p.c = std::move(v);
        p.trim();
        return p;
    }
    static UPoly constant(const K& k) { return from_coeffs({k}); }
    static UPoly x(unsigned e = 1) {
        std::vector<K> v(e + 1, K(0));
        v[e] = K(1);
        return from_coeffs(std::move(v));
    }

    void trim() {
        while (!c.empty() && kf_is_zero(c.back())) c.pop_back();
    }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    K lc() const {
        if (c.empty()) throw std::domain_error("lc of zero polynomial");
        return c.back();
    }
    K coeff(std::size_t i) const { return i < c.size() ? c[i] : K(0); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> v(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return from_coeffs(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<K> v(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return from_coeffs(std::move(v));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> v(a.c.size() + b.c.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] = v[i + j] + a.c[i] * b.c[j];
        return from_coeffs(std::move(v));
    }
    friend UPoly operator*(const UPoly& a, const K& k) {
        std::vector<K> v = a.c;
        for (auto& x : v) x = x * k;
        return from_coeffs(std::move(v));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (std::size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly derivative() const {
        if (c.size() <= 1) return UPoly();
        std::vector<K> v(c.size() - 1, K(0));
        for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * K(Rat(static_cast<long>(i)));
        return from_coeffs(std::move(v));
    }

    K eval(const K& x) const {
        K r(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * (K(1) / lc());
    }
};

template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("univariate division by zero");
    UPoly<K> r = a;
    if (a.deg() < b.deg()) return {UPoly<K>(), r};
    std::vector<K> q(a.deg() - b.deg() + 1, K(0));
    K inv = K(1) / b.lc();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        K f = r.lc() * inv;
        q[k] = f;
        // r -= f * x^k * b
        for (int i = 0; i <= b.deg(); ++i) r.c[i + k] = r.c[i + k] - f * b.c[i];
        r.trim();
    }
    return {UPoly<K>::from_coeffs(std::move(q)), r};
}

template <class K>
UPoly<K> operator/(const UPoly<K>& a, const UPoly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact univariate division");
    return q;
}

// Monic gcd via Euclid; gcd(0,0) = 0.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Yun squarefree decomposition: f = unit * prod_i factor_i^mult_i with the
// factors monic, squarefree, pairwise coprime, and multiplicities strictly
// increasing. Requires characteristic 0 (true for Rat and QuadExt).
template <class K>
struct SquarefreePart {
    UPoly<K> factor;
    int multiplicity;
};

template <class K>
struct SquarefreeDecomposition {
    K unit;
    std::vector<SquarefreePart<K>> parts;
};

template <class K>
SquarefreeDecomposition<K> squarefree_decomposition(const UPoly<K>& f) {
    SquarefreeDecomposition<K> out;
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    out.unit = f.lc();
    UPoly<K> g = f.monic();
    if (g.deg() == 0) return out;
    UPoly<K> gp = g.derivative();
    UPoly<K> a0 = gcd(g, gp);
    UPoly<K> b = g / a0;
    UPoly<K> d = gp / a0 - b.derivative();
    for (int i = 1; b.deg() > 0; ++i) {
        UPoly<K> p = gcd(b, d);
        if (p.deg() > 0) out.parts.push_back({p, i});
        b = b / p;
        UPoly<K> cc = d / p;
        d = cc - b.derivative();
    }
    return out;
}

}  // namespace hurwitz
