#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "quadsolv/errors.hpp"

namespace quadsolv {

// Exact arbitrary-precision integers and rationals.  cpp_rational keeps the
// canonical form this library relies on: gcd(|num|, den) = 1, den > 0,
// zero stored as 0/1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline bool is_one(const Rat& r) { return r == 1; }

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat_div(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw usage_error("rational division by zero");
    return a / b;
}

inline Rat rat_pow(const Rat& a, long e) {
    if (e < 0) {
        if (a.is_zero()) throw usage_error("zero raised to a negative power");
        return 1 / rat_pow(a, -e);
    }
    Rat acc = 1, base = a;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rat& r) { return r.str(); }

inline Rat rat_from_string(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw validation_error("cannot parse rational number: '" + s + "'");
    }
}

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

} // namespace quadsolv
