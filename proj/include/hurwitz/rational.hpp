#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace hurwitz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Floor division for rationals; exact when is_integer(r).
inline Int rat_floor(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);
    if (q * rat_den(r) != rat_num(r) && rat_num(r) < 0) --q;
    return q;
}

inline std::string rat_str(const Rat& r) { return r.str(); }

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

// Exact integer square root test.
inline std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// If r is the square of a rational, returns that (nonnegative) square root.
inline std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto n = int_sqrt_exact(rat_num(r));
    if (!n) return std::nullopt;
    auto d = int_sqrt_exact(rat_den(r));
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

}  // namespace hurwitz
