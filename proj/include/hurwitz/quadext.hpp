#pragma once

#include <stdexcept>
#include <string>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Element a + b*sqrt(s) of a quadratic extension of Q. s is carried per
// element; elements with b == 0 normalize to s == 0 so plain rationals mix
// freely. Arithmetic between elements with different nonzero s throws.
// s must not be a rational square (use rat_sqrt_exact to stay in Q instead);
// under that assumption a + b*sqrt(s) = 0 iff a = b = 0, so division is safe.
struct QuadExt {
    Rat a{0};
    Rat b{0};
    Rat s{0};

    QuadExt() = default;
    QuadExt(long v) : a(v) {}                    // NOLINT(google-explicit-constructor)
    QuadExt(const Rat& v) : a(v) {}              // NOLINT(google-explicit-constructor)
    QuadExt(const Rat& a_, const Rat& b_, const Rat& s_) : a(a_), b(b_), s(s_) {
        normalize();
    }

    static QuadExt sqrt_of(const Rat& s_) { return QuadExt(Rat(0), Rat(1), s_); }

    void normalize() {
        if (b == 0) s = 0;
        if (s == 0 && b != 0) {  // sqrt(0) = 0
            b = 0;
        }
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    QuadExt conj() const { return QuadExt(a, -b, s); }
    Rat norm() const { return a * a - b * b * s; }

    friend Rat merged_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.b == 0) return y.s;
        if (y.b == 0) return x.s;
        if (x.s != y.s) throw std::domain_error("mixed quadratic extensions");
        return x.s;
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a + y.a, x.b + y.b, merged_radicand(x, y));
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a - y.a, x.b - y.b, merged_radicand(x, y));
    }
    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a, -x.b, x.s); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Rat s = merged_radicand(x, y);
        return QuadExt(x.a * y.a + x.b * y.b * s, x.a * y.b + x.b * y.a, s);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw std::domain_error("division by zero in quadratic extension");
        Rat s = merged_radicand(x, y);
        Rat n = y.norm();
        if (n == 0) throw std::domain_error("zero norm: radicand is a rational square");
        QuadExt t = x * y.conj();
        return QuadExt(t.a / n, t.b / n, s);
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b && (x.b == 0 || x.s == y.s);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const {
        if (b == 0) return rat_str(a);
        std::string t;
        if (a != 0) t += rat_str(a) + (b < 0 ? " - " : " + ");
        else if (b < 0) t += "-";
        Rat ab = b < 0 ? Rat(-b) : b;
        if (ab != 1) t += rat_str(ab) + "*";
        t += "sqrt(" + rat_str(s) + ")";
        return t;
    }
};

inline bool kf_is_zero(const Rat& x) { return x == 0; }
inline bool kf_is_zero(const QuadExt& x) { return x.is_zero(); }

}  // namespace hurwitz
