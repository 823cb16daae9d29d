#pragma once

// The explicit degree-6 pencil. A marked point T = (x_t, y_t) on the plane
// cubic E: y^2 = x^3 + 1 determines a genus-2 curve
//
//   C:  Y^2 = f(X),   f = -(x_t+1)(X^2-1)(3X^4 + 3(x_t-1)X^2 + q),
//   q = x_t^2 - x_t + 1,
//
// together with a degree-6 map C -> P^1 that factors as a double cover
// C -> E, (X,Y) |-> (-(X^2+x_t)/(X^2-1), Y/(X^2-1)^2), followed by a
// degree-3 map E -> P^1 (translate by T, then take z = (y+1)/2). The
// composite has the closed form (n1(X) Y + n0(X)) / (2 (1+x_t)^2 X^6) and
// is totally branched over 0, 1 and infinity with one extra simple branch
// point: the z-image of 2T. Everything here is exact. Symbolic identities
// are certified in MPoly modulo the two curve relations; specialized
// members are analyzed over Q or over a quadratic extension Q(sqrt(s)).

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/mpoly.hpp"
#include "hurwitz/quadext.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/resultant.hpp"
#include "hurwitz/upoly.hpp"

namespace hurwitz {

namespace detail {

inline MPoly mvar(Var v, unsigned e = 1) { return MPoly::variable(v, e); }
inline MPoly mconst(long c) { return MPoly(c); }

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}

template <class K>
K kpow(K base, unsigned e) {
    K r(1);
    while (e) {
        if (e & 1u) r = r * base;
        if (e >>= 1u) base = base * base;
    }
    return r;
}

inline std::string kstr(const Rat& x) { return rat_str(x); }
inline std::string kstr(const QuadExt& x) { return x.str(); }

// Evaluate a polynomial in the parameters x_t, y_t only.
template <class K>
K param_value(const MPoly& p, const K& xt, const K& yt) {
    K out(0);
    for (const auto& [e, c] : p.terms) {
        internal_check(e[static_cast<int>(Var::X)] == 0 && e[static_cast<int>(Var::Y)] == 0 &&
                           e[static_cast<int>(Var::x1)] == 0 && e[static_cast<int>(Var::y1)] == 0 &&
                           e[static_cast<int>(Var::z)] == 0,
                       "parameter polynomial mentions a non-parameter variable");
        out = out + K(c) * kpow(xt, e[static_cast<int>(Var::xt)]) *
                        kpow(yt, e[static_cast<int>(Var::yt)]);
    }
    return out;
}

// Specialize the parameters, leaving a dense univariate polynomial in X.
template <class K>
UPoly<K> specialize_X(const MPoly& p, const K& xt, const K& yt) {
    std::vector<K> cs;
    for (const auto& [e, c] : p.terms) {
        internal_check(e[static_cast<int>(Var::Y)] == 0 && e[static_cast<int>(Var::x1)] == 0 &&
                           e[static_cast<int>(Var::y1)] == 0 && e[static_cast<int>(Var::z)] == 0,
                       "polynomial mentions a variable other than X and the parameters");
        std::size_t k = e[static_cast<int>(Var::X)];
        if (cs.size() <= k) cs.resize(k + 1, K(0));
        cs[k] = cs[k] + K(c) * kpow(xt, e[static_cast<int>(Var::xt)]) *
                            kpow(yt, e[static_cast<int>(Var::yt)]);
    }
    return UPoly<K>::from_coeffs(std::move(cs));
}

template <class K>
std::string upoly_str(const UPoly<K>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.deg(); i >= 0; --i) {
        if (kf_is_zero(p.coeff(static_cast<std::size_t>(i)))) continue;
        if (!s.empty()) s += " + ";
        s += "(" + kstr(p.coeff(static_cast<std::size_t>(i))) + ")";
        if (i > 0) s += "*X^" + std::to_string(i);
    }
    return s;
}

}  // namespace detail

// All symbolic pieces of the tower, over the fixed variable set. The curve
// relations make y_t and Y square roots: y_t^2 = x_t^3 + 1 and Y^2 = f(X).
struct FamilyKernel {
    MPoly q;                  // x_t^2 - x_t + 1
    MPoly f;                  // the sextic in X
    MPoly n1, n0;             // composite map = (n1*Y + n0) / den
    MPoly den;                // 2 (1+x_t)^2 X^6
    MPoly deg3_num, deg3_den; // degree-3 map E -> P^1, in (x1, y1)
    MPoly P, Q;               // double cover C -> E: x1 = P/Q, y1 = Y/Q^2
    std::vector<RingRelation> rels;

    static const FamilyKernel& get() {
        static const FamilyKernel k = [] {
            using detail::mconst;
            using detail::mvar;
            FamilyKernel r;
            MPoly X = mvar(Var::X), xt = mvar(Var::xt), yt = mvar(Var::yt);
            MPoly X2 = mvar(Var::X, 2);
            r.q = xt * xt - xt + mconst(1);
            MPoly quart = mconst(3) * mvar(Var::X, 4) + mconst(3) * (xt - mconst(1)) * X2 + r.q;
            r.f = -(xt + mconst(1)) * (X2 - mconst(1)) * quart;
            r.n1 = (xt - mconst(2)).pow(2) * X2 - mconst(4) * r.q;
            r.n0 = ((xt + mconst(1)).pow(2) - mconst(3) * yt) * mvar(Var::X, 6) -
                   mconst(6) * yt * (xt - mconst(2)) * mvar(Var::X, 4) -
                   mconst(3) * yt * (xt - mconst(2)).pow(2) * X2 + mconst(4) * yt * r.q;
            r.den = mconst(2) * (xt + mconst(1)).pow(2) * mvar(Var::X, 6);
            MPoly x1 = mvar(Var::x1), y1 = mvar(Var::y1);
            r.deg3_num = -(mconst(3) * xt.pow(2) * x1 + xt.pow(3) + mconst(4)) * y1 +
                         (mconst(1) + yt) * x1.pow(3) + mconst(3) * xt * (yt - mconst(1)) * x1.pow(2) +
                         mconst(3) * xt.pow(2) * x1 + mconst(4) * yt - xt.pow(3);
            r.deg3_den = mconst(2) * (x1 - xt).pow(3);
            r.P = -(X2 + xt);
            r.Q = X2 - mconst(1);
            r.rels = {{Var::yt, xt.pow(3) + mconst(1)}, {Var::Y, r.f}};
            return r;
        }();
        return k;
    }
};

// Quotient of two polynomials, compared exactly modulo curve relations by
// cross multiplication. No gcd normalization; denominators must stay
// nonzerodivisors in the quotient ring (true for the ones built here).
struct RatExpr {
    MPoly num;
    MPoly den;

    RatExpr() : den(MPoly(1)) {}
    RatExpr(const MPoly& n) : num(n), den(MPoly(1)) {}  // NOLINT(google-explicit-constructor)
    RatExpr(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("zero denominator");
    }

    friend RatExpr operator+(const RatExpr& a, const RatExpr& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RatExpr operator-(const RatExpr& a, const RatExpr& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend RatExpr operator-(const RatExpr& a) { return {-a.num, a.den}; }
    friend RatExpr operator*(const RatExpr& a, const RatExpr& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend RatExpr operator/(const RatExpr& a, const RatExpr& b) {
        if (b.num.is_zero()) throw std::domain_error("division by zero expression");
        return {a.num * b.den, a.den * b.num};
    }

    bool is_zero(const std::vector<RingRelation>& rels) const {
        return reduce(num, rels).is_zero();
    }
    bool same(const RatExpr& o, const std::vector<RingRelation>& rels) const {
        return reduce(num * o.den - o.num * den, rels).is_zero();
    }
};

// z-image of the doubled marked point, via the tangent line at (x_t, y_t).
// This is the extra branch value of the composite map.
inline RatExpr tangent_double_z() {
    using detail::mconst;
    using detail::mvar;
    RatExpr xt{mvar(Var::xt)}, yt{mvar(Var::yt)};
    RatExpr lam = RatExpr{mconst(3)} * xt * xt / (RatExpr{mconst(2)} * yt);
    RatExpr x2 = lam * lam - RatExpr{mconst(2)} * xt;
    RatExpr y2 = lam * (xt - x2) - yt;
    return (y2 + RatExpr{mconst(1)}) / RatExpr{mconst(2)};
}

// x-coordinate of the doubled marked point (not the branch value itself;
// the branch value is the z-image (y_2+1)/2, see tangent_double_z).
inline RatExpr tangent_double_x() {
    using detail::mconst;
    using detail::mvar;
    RatExpr xt{mvar(Var::xt)}, yt{mvar(Var::yt)};
    RatExpr lam = RatExpr{mconst(3)} * xt * xt / (RatExpr{mconst(2)} * yt);
    return lam * lam - RatExpr{mconst(2)} * xt;
}

// Substitute x1 = P/Q, y1 = Y/Q^2 into a polynomial of weighted degree <= 3
// (x1 counts 1, y1 counts 2) and clear denominators by Q^3.
inline MPoly clear_deg2_denominators(const MPoly& g) {
    const auto& k = FamilyKernel::get();
    MPoly out;
    for (const auto& [e, c] : g.terms) {
        int a = e[static_cast<int>(Var::x1)];
        int b = e[static_cast<int>(Var::y1)];
        int rem = 3 - a - 2 * b;
        if (rem < 0) throw std::invalid_argument("weighted degree exceeds 3 in (x1, y1)");
        Exp pe = e;
        pe[static_cast<int>(Var::x1)] = 0;
        pe[static_cast<int>(Var::y1)] = 0;
        out += MPoly::monomial(pe, c) * k.P.pow(static_cast<unsigned>(a)) *
               detail::mvar(Var::Y, static_cast<unsigned>(b)) * k.Q.pow(static_cast<unsigned>(rem));
    }
    return out;
}

// Cross-multiplied difference between the composite of the two displayed
// maps and the closed form. Zero certifies that they are the same rational
// function modulo the curve relations.
inline MPoly composition_defect() {
    const auto& k = FamilyKernel::get();
    MPoly a = clear_deg2_denominators(k.deg3_num);
    MPoly b = clear_deg2_denominators(k.deg3_den);
    MPoly num = a * k.den - (k.n1 * detail::mvar(Var::Y) + k.n0) * b;
    return reduce(num, k.rels);
}

// Norm of the numerator against its Y-conjugate: n0^2 - n1^2 f, reduced.
// Divisible by X^6, which makes (0, y_t) a removable point of the map.
inline MPoly norm_form() {
    const auto& k = FamilyKernel::get();
    return reduce(k.n0 * k.n0 - k.n1 * k.n1 * k.f, k.rels);
}

// Cross-multiplied difference between the limit of the closed form at
// (0, y_t) (the X^6 coefficient of the norm form over 16 y_t q (1+x_t)^2)
// and the z-image of the doubled marked point. Zero certifies the extra
// branch value.
inline MPoly branch_value_defect() {
    using detail::mconst;
    using detail::mvar;
    const auto& k = FamilyKernel::get();
    MPoly h6 = norm_form().coeff_of(Var::X, 6);
    RatExpr lim{h6, mconst(16) * mvar(Var::yt) * k.q * (mvar(Var::xt) + mconst(1)).pow(2)};
    RatExpr v = tangent_double_z();
    return reduce(lim.num * v.den - v.num * lim.den, k.rels);
}

// (z den - n0)^2 - n1^2 f with a free variable z: the X-values of the fiber
// of z, counted over both sheets of the double cover C -> P^1_X.
inline MPoly fiber_form() {
    const auto& k = FamilyKernel::get();
    MPoly a = detail::mvar(Var::z) * k.den - k.n0;
    return reduce(a * a - k.n1 * k.n1 * k.f, k.rels);
}

// The fiber form over the extra branch value, cleared of denominators. Its
// X^0..X^7 coefficients vanish identically (the extra critical point sits at
// X = 0 with even multiplicity >= 2 on top of the order-6 pole side); the
// X^8 coefficient is the locus where that critical point degenerates
// further. It vanishes at (x_t, y_t) = (2, 3) and at no generic member.
inline MPoly free_fiber_discriminant() {
    const auto& k = FamilyKernel::get();
    RatExpr v = tangent_double_z();
    MPoly a = v.num * k.den - v.den * k.n0;
    MPoly g = reduce(a * a - v.den * v.den * k.n1 * k.n1 * k.f, k.rels);
    for (unsigned i = 0; i < 8; ++i)
        detail::internal_check(g.coeff_of(Var::X, i).is_zero(),
                               "fiber form over the extra branch value must vanish to order 8");
    return g.coeff_of(Var::X, 8);
}

// Resultant of the sextic with its X-derivative, as a polynomial in x_t.
// Its vanishing set is the degenerate-sextic locus of the pencil.
inline MPoly sextic_discriminant() {
    return resultant_with_derivative(FamilyKernel::get().f, Var::X);
}

// ---------------------------------------------------------------------------
// Specialized arithmetic: points of E and members of the pencil over an
// exact field K (Rat or QuadExt).

inline std::string value_str(const Rat& x) { return detail::kstr(x); }
inline std::string value_str(const QuadExt& x) { return detail::kstr(x); }

template <class K>
struct EPoint {
    K x{};
    K y{};
    bool infinite = false;

    static EPoint at_infinity() {
        EPoint p;
        p.infinite = true;
        return p;
    }
    bool on_curve() const { return infinite || kf_is_zero(y * y - (x * x * x + K(1))); }

    friend bool operator==(const EPoint& a, const EPoint& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const EPoint& a, const EPoint& b) { return !(a == b); }
};

template <class K>
EPoint<K> ec_neg(const EPoint<K>& p) {
    if (p.infinite) return p;
    return {p.x, -p.y, false};
}

// Full group law on y^2 = x^3 + 1. Chord when the x-coordinates differ,
// tangent when doubling, infinity for inverse pairs; inputs are validated,
// so no division by zero can escape the handled cases.
template <class K>
EPoint<K> ec_add(const EPoint<K>& a, const EPoint<K>& b) {
    if (!a.on_curve() || !b.on_curve())
        throw std::invalid_argument("point is not on y^2 = x^3 + 1");
    if (a.infinite) return b;
    if (b.infinite) return a;
    K lam;
    if (a.x == b.x) {
        if (kf_is_zero(a.y + b.y)) return EPoint<K>::at_infinity();
        lam = K(3) * a.x * a.x / (K(2) * a.y);  // a == b with y != 0
    } else {
        lam = (b.y - a.y) / (b.x - a.x);
    }
    K x3 = lam * lam - a.x - b.x;
    K y3 = lam * (a.x - x3) - a.y;
    return {x3, y3, false};
}

template <class K>
EPoint<K> ec_double(const EPoint<K>& p) {
    return ec_add(p, p);
}

// A value of a map to P^1: either a field element or infinity.
template <class K>
struct ProjValue {
    K value{};
    bool infinite = false;

    static ProjValue of(const K& v) { return {v, false}; }
    static ProjValue at_infinity() { return {K(0), true}; }

    friend bool operator==(const ProjValue& a, const ProjValue& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.value == b.value;
    }
    friend bool operator!=(const ProjValue& a, const ProjValue& b) { return !(a == b); }
};

// Degree-3 map E -> P^1 attached to the marked point t: translate by t,
// then take (y+1)/2. Its only pole is -t (order 3). The displayed formula
// has a removable 0/0 at t itself, filled through the tangent line (value
// = z-image of 2t); the point at infinity goes to (y_t+1)/2.
template <class K>
ProjValue<K> deg3_value(const EPoint<K>& p, const EPoint<K>& t) {
    if (!p.on_curve() || !t.on_curve())
        throw std::invalid_argument("point is not on y^2 = x^3 + 1");
    if (t.infinite) throw std::invalid_argument("marked point must be affine");
    if (kf_is_zero(t.y))
        throw std::domain_error("marked point is 2-torsion; the degree-3 map degenerates");
    if (p.infinite) return ProjValue<K>::of((t.y + K(1)) / K(2));
    if (p.x == t.x) {
        if (p.y == t.y) {
            EPoint<K> d = ec_add(t, t);
            return ProjValue<K>::of((d.y + K(1)) / K(2));
        }
        return ProjValue<K>::at_infinity();
    }
    K num = -(K(3) * t.x * t.x * p.x + t.x * t.x * t.x + K(4)) * p.y +
            (K(1) + t.y) * p.x * p.x * p.x + K(3) * t.x * (t.y - K(1)) * p.x * p.x +
            K(3) * t.x * t.x * p.x + K(4) * t.y - t.x * t.x * t.x;
    K diff = p.x - t.x;
    K den = K(2) * detail::kpow(diff, 3);
    return ProjValue<K>::of(num / den);
}

// Double cover C -> E. The four points with X^2 = 1 (the Weierstrass points
// over X = 1 and X = -1) go to E's point at infinity.
template <class K>
EPoint<K> deg2_image(const K& X, const K& Y, const K& xt) {
    K q = X * X - K(1);
    if (kf_is_zero(q)) return EPoint<K>::at_infinity();
    return {-(X * X + xt) / q, Y / (q * q), false};
}

// Ramification profile of one fiber: the multiset of local multiplicities,
// descending. Nonempty diagnostics mean the fiber could not be certified
// (a collision with the points over X = infinity, or x-values carrying both
// sheets, which the norm form cannot split).
struct FiberProfile {
    std::vector<int> parts;
    std::vector<std::string> diagnostics;

    bool certified() const { return diagnostics.empty(); }
    int defect() const {  // sum of (e - 1)
        int s = 0;
        for (int e : parts) s += e - 1;
        return s;
    }
};

template <class K>
struct GenusCheck {
    int genus = -1;                // 2 when the sextic is squarefree
    UPoly<K> repeated_factor;      // nonconstant witness otherwise
    bool smooth() const { return genus == 2; }
};

template <class K>
struct FamilyReport {
    EPoint<K> doubled;     // 2 T on E
    K free_value{};        // z-image of 2T: the extra branch value
    K infinity_value{};    // value of the map at the two points over X = infinity
    int genus = -1;
    FiberProfile over_zero, over_one, over_infinity, over_free;
    int rh_total = -1;     // sum of (e-1) over the four fibers; 14 certifies
                           // that no further critical value exists
    bool admissible = false;
    std::vector<std::string> diagnostics;
};

// One member of the pencil, specialized at an affine point (x_t, y_t) of E.
// Construction rejects off-curve parameters and the structurally degenerate
// members x_t = -1 (sextic drops degree) and y_t = 0 (2-torsion).
template <class K>
class SpecializedFamily {
public:
    SpecializedFamily(const K& xt, const K& yt) : xt_(xt), yt_(yt) {
        if (!kf_is_zero(yt * yt - (xt * xt * xt + K(1))))
            throw std::invalid_argument("marked point is not on y^2 = x^3 + 1");
        if (xt == K(-1))
            throw std::domain_error(
                "x_t = -1: the leading coefficient -(x_t+1) of the sextic vanishes");
        if (kf_is_zero(yt))
            throw std::domain_error(
                "y_t = 0: the marked point is 2-torsion and the extra branch value escapes");
        const auto& k = FamilyKernel::get();
        q_ = detail::param_value(k.q, xt_, yt_);
        detail::internal_check(!kf_is_zero(q_), "q = x_t^2 - x_t + 1 vanished despite y_t != 0");
        f_ = detail::specialize_X(k.f, xt_, yt_);
        n1_ = detail::specialize_X(k.n1, xt_, yt_);
        n0_ = detail::specialize_X(k.n0, xt_, yt_);
        den_ = detail::specialize_X(k.den, xt_, yt_);
        detail::internal_check(f_.deg() == 6 && den_.deg() == 6, "sextic or denominator degenerated");
        UPoly<K> h = n0_ * n0_ - n1_ * n1_ * f_;
        for (std::size_t i = 0; i < 6; ++i)
            detail::internal_check(kf_is_zero(h.coeff(i)),
                                   "norm form must vanish to order 6 at X = 0");
        K xp1 = xt_ + K(1);
        removable_ = h.coeff(6) / (K(16) * yt_ * q_ * detail::kpow(xp1, 2));
    }

    const K& xt() const { return xt_; }
    const K& yt() const { return yt_; }
    const UPoly<K>& sextic() const { return f_; }

    EPoint<K> doubled() const { return ec_double(EPoint<K>{xt_, yt_, false}); }

    // The extra branch value, through the group law on E.
    K free_value() const {
        EPoint<K> d = doubled();
        return (d.y + K(1)) / K(2);
    }

    // Common value at the two points over X = infinity (a regular value for
    // admissible members): the X^6 coefficient ratio of n0 and den.
    K infinity_value() const {
        K xp1 = xt_ + K(1);
        return (detail::kpow(xp1, 2) - K(3) * yt_) / (K(2) * detail::kpow(xp1, 2));
    }

    // The composite map at a point of C. At X = 0 the sheet Y = y_t is the
    // removable point (finite value, from the X^6 coefficient of the norm
    // form) and everything else on X = 0 is the order-6 pole side.
    ProjValue<K> value_at(const K& X, const K& Y) const {
        if (kf_is_zero(X)) {
            if (Y == yt_) return ProjValue<K>::of(removable_);
            return ProjValue<K>::at_infinity();
        }
        K d = den_.eval(X);
        return ProjValue<K>::of((n1_.eval(X) * Y + n0_.eval(X)) / d);
    }

    GenusCheck<K> genus_check() const {
        GenusCheck<K> out;
        UPoly<K> g = gcd(f_, f_.derivative());
        if (g.deg() == 0)
            out.genus = 2;
        else
            out.repeated_factor = g;
        return out;
    }

    // Profile over a finite value z0, from the norm form
    //   G = (z0 den - n0)^2 - n1^2 f.
    // X = 0 carries the pole sheet (order 6 of G for free) plus the
    // removable sheet with multiplicity G's excess over 6. A multiplicity-m
    // squarefree factor of the rest contributes one point per root: a
    // Weierstrass root (shared with f) is a single point of C, and a
    // non-Weierstrass root carries one sheet only, certified by
    // gcd(n1, z0 den - n0) staying coprime to it.
    FiberProfile fiber(const K& z0) const {
        FiberProfile out;
        UPoly<K> a = den_ * z0 - n0_;
        UPoly<K> g = a * a - n1_ * n1_ * f_;
        detail::internal_check(!g.is_zero(), "norm form collapsed; sextic cannot be squarefree");
        if (g.deg() < 12) {
            out.diagnostics.push_back("fiber of " + detail::kstr(z0) +
                                      " reaches the two points over X = infinity");
            return out;
        }
        std::size_t m0 = 0;
        while (kf_is_zero(g.coeff(m0))) ++m0;
        detail::internal_check(m0 >= 6 && m0 % 2 == 0,
                               "norm form must vanish to even order >= 6 at X = 0");
        int e0 = static_cast<int>(m0) - 6;
        if (e0 > 0) out.parts.push_back(e0);
        std::vector<K> shifted(g.c.begin() + static_cast<long>(m0), g.c.end());
        UPoly<K> rest = UPoly<K>::from_coeffs(std::move(shifted));
        if (rest.deg() > 0) {
            auto dec = squarefree_decomposition(rest);
            for (const auto& part : dec.parts) {
                UPoly<K> s = part.factor;
                UPoly<K> w = gcd(s, f_);
                if (w.deg() > 0) {
                    for (int i = 0; i < w.deg(); ++i) out.parts.push_back(part.multiplicity);
                    s = s / w;
                }
                if (s.deg() > 0) {
                    UPoly<K> both = gcd(s, gcd(n1_, a));
                    if (both.deg() > 0) {
                        out.diagnostics.push_back(
                            "fiber of " + detail::kstr(z0) +
                            ": x-values carry both sheets; the norm form cannot split " +
                            detail::upoly_str(both));
                        continue;
                    }
                    for (int i = 0; i < s.deg(); ++i) out.parts.push_back(part.multiplicity);
                }
            }
        }
        if (out.certified()) {
            int total = 0;
            for (int e : out.parts) total += e;
            if (total != 6)
                out.diagnostics.push_back("fiber of " + detail::kstr(z0) + " sums to " +
                                          std::to_string(total) + ", not the degree 6");
        }
        std::sort(out.parts.begin(), out.parts.end(), std::greater<int>());
        return out;
    }

    // Profile over infinity. The denominator 2(1+x_t)^2 X^6 vanishes only at
    // X = 0; there the sheet Y = y_t is removable and the sheet Y = -y_t has
    // numerator value 8 y_t q != 0, one pole of order 6. The points over
    // X = infinity are finite (X-degrees: n0 matches den, n1*Y grows like
    // X^5), so the profile is exactly (6).
    FiberProfile pole_profile() const {
        FiberProfile out;
        K at_minus = n0_.coeff(0) - n1_.coeff(0) * yt_;
        detail::internal_check(at_minus == K(8) * yt_ * q_ && !kf_is_zero(at_minus),
                               "pole-sheet numerator must be 8 y_t q");
        for (std::size_t i = 0; i < 6; ++i)
            detail::internal_check(kf_is_zero(den_.coeff(i)), "denominator must be 2(1+x_t)^2 X^6");
        out.parts = {6};
        return out;
    }

    FamilyReport<K> analyze() const {
        FamilyReport<K> r;
        r.doubled = doubled();
        r.free_value = free_value();
        r.infinity_value = infinity_value();
        detail::internal_check(r.free_value == removable_,
                               "tangent doubling and the norm-form limit disagree");
        auto gc = genus_check();
        r.genus = gc.genus;
        if (!gc.smooth()) {
            r.diagnostics.push_back("sextic has a repeated factor: " +
                                    detail::upoly_str(gc.repeated_factor));
            return r;
        }
        if (r.free_value == K(0) || r.free_value == K(1))
            r.diagnostics.push_back("extra branch value " + detail::kstr(r.free_value) +
                                    " collides with a branch value of the triangle {0, 1, inf}");
        if (r.infinity_value == K(0) || r.infinity_value == K(1) ||
            r.infinity_value == r.free_value)
            r.diagnostics.push_back("value at infinity " + detail::kstr(r.infinity_value) +
                                    " collides with a branch value");
        r.over_zero = fiber(K(0));
        r.over_one = fiber(K(1));
        r.over_infinity = pole_profile();
        r.over_free = fiber(r.free_value);
        const FiberProfile* fibers[] = {&r.over_zero, &r.over_one, &r.over_infinity, &r.over_free};
        const char* names[] = {"0", "1", "infinity", "the extra value"};
        bool all_certified = true;
        for (int i = 0; i < 4; ++i) {
            for (const auto& d : fibers[i]->diagnostics) r.diagnostics.push_back(d);
            all_certified = all_certified && fibers[i]->certified();
        }
        if (all_certified) {
            r.rh_total = 0;
            for (const auto* f : fibers) r.rh_total += f->defect();
            const std::vector<int> expect[] = {{3, 3}, {3, 3}, {6}, {2, 1, 1, 1, 1}};
            for (int i = 0; i < 4; ++i)
                if (fibers[i]->parts != expect[i])
                    r.diagnostics.push_back(std::string("unexpected profile over ") + names[i]);
            // 2*2 - 2 = 6*(0 - 2) + 14: with these four fibers accounting for
            // the whole Riemann-Hurwitz budget, no other critical value exists.
            if (r.rh_total != 14)
                r.diagnostics.push_back("ramification does not close up at 14");
        }
        r.admissible = r.genus == 2 && all_certified && r.diagnostics.empty();
        return r;
    }

private:
    K xt_, yt_, q_;
    UPoly<K> f_, n1_, n0_, den_;
    K removable_{};
};

// Closed form of the composite map at one point, for given parameters.
template <class K>
ProjValue<K> deg6_value(const K& X, const K& Y, const K& xt, const K& yt) {
    return SpecializedFamily<K>(xt, yt).value_at(X, Y);
}

// ---------------------------------------------------------------------------
// Scan for members with integer x_t. y_t = k sqrt(s) with s the squarefree
// part of x_t^3 + 1; s = 1 means y_t is rational. Every rational-y_t member
// in reach turns out to collide (the extra branch value falls on 0 or 1),
// so honest members come from quadratic extensions.

// m = k^2 s with s squarefree, sign carried on s, k > 0. m must be nonzero.
inline std::pair<Int, Int> squarefree_split(Int m) {
    if (m == 0) throw std::domain_error("squarefree split of zero");
    Int s = m < 0 ? -1 : 1;
    if (m < 0) m = -m;
    Int k = 1;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int a = 0;
        while (m % p == 0) {
            m /= p;
            ++a;
        }
        for (int i = 0; i < a / 2; ++i) k *= p;
        if (a % 2) s *= p;
    }
    s *= m;
    return {k, s};
}

struct ScanEntry {
    long xt = 0;
    Rat k{0}, s{0};  // y_t = k sqrt(s); s = 1 means y_t = k is rational
    int genus = -1;
    bool admissible = false;
    std::string free_value, infinity_value;
    std::vector<std::vector<int>> profiles;  // over 0, 1, infinity, extra value
    std::vector<std::string> diagnostics;

    bool rational_yt() const { return s == 1; }
};

inline std::vector<ScanEntry> scan_members(long xt_from, long xt_to) {
    std::vector<ScanEntry> out;
    for (long x = xt_from; x <= xt_to; ++x) {
        ScanEntry e;
        e.xt = x;
        Int m = Int(x) * x * x + 1;
        if (m == 0) {
            e.diagnostics.push_back("x_t = -1: degenerate member (sextic drops degree)");
            out.push_back(std::move(e));
            continue;
        }
        auto [k, s] = squarefree_split(m);
        e.k = Rat(k);
        e.s = Rat(s);
        QuadExt yt = (s == 1) ? QuadExt(Rat(k)) : QuadExt(Rat(0), Rat(k), Rat(s));
        try {
            SpecializedFamily<QuadExt> member(QuadExt(Rat(x)), yt);
            auto rep = member.analyze();
            e.genus = rep.genus;
            e.admissible = rep.admissible;
            e.free_value = rep.free_value.str();
            e.infinity_value = rep.infinity_value.str();
            e.diagnostics = rep.diagnostics;
            for (const FiberProfile* f :
                 {&rep.over_zero, &rep.over_one, &rep.over_infinity, &rep.over_free})
                e.profiles.push_back(f->parts);
        } catch (const std::exception& ex) {
            e.diagnostics.push_back(ex.what());
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace hurwitz
