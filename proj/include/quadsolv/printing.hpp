#pragma once

#include <sstream>
#include <string>

#include "quadsolv/rational_function.hpp"

namespace quadsolv {

// How a coefficient should appear inside a larger product/sum.
struct CoeffFormat {
    std::string magnitude;  // textual absolute value (or full text when sign can't fold)
    bool negative = false;
    bool is_one = false;    // |c| == 1, so "c*x" collapses to "x"
    bool composite = false; // needs parentheses when used as a factor
};

inline CoeffFormat format_coeff(const Rat& c) {
    CoeffFormat f;
    f.negative = c < 0;
    Rat mag = f.negative ? Rat(-c) : c;
    f.magnitude = to_string(mag);
    f.is_one = mag == 1;
    f.composite = !is_integer(mag);
    return f;
}

template <class K>
std::string poly_to_string(const Polynomial<K>& p, const std::string& var,
                           CoeffFormat (*fmt)(const K&)) {
    if (is_zero(p)) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        K c = p.coeff(i);
        if (is_zero(c)) continue;
        CoeffFormat f = fmt(c);
        if (first) {
            if (f.negative) os << "-";
            first = false;
        } else {
            os << (f.negative ? " - " : " + ");
        }
        if (i == 0) {
            os << f.magnitude;
            continue;
        }
        if (!f.is_one) {
            os << (f.composite ? "(" + f.magnitude + ")" : f.magnitude) << "*";
        }
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

inline std::string to_string(const Polynomial<Rat>& p, const std::string& var = "x") {
    return poly_to_string<Rat>(p, var, &format_coeff);
}

inline std::string to_string(const RatFunc& f, const std::string& var = "x") {
    std::string num = to_string(f.num(), var);
    if (f.is_polynomial()) return num;
    std::string den = to_string(f.den(), var);
    if (num.find(' ') != std::string::npos) num = "(" + num + ")";
    if (den.find(' ') != std::string::npos || den.find('*') != std::string::npos)
        den = "(" + den + ")";
    return num + "/" + den;
}

inline CoeffFormat format_coeff(const NumberFieldElem& c) {
    if (c.is_rational_value()) return format_coeff(c.rational_value());
    CoeffFormat f;
    f.magnitude = to_string(c);
    f.composite = f.magnitude.find(' ') != std::string::npos ||
                  f.magnitude.find('/') != std::string::npos;
    return f;
}

inline std::string to_string(const Polynomial<NumberFieldElem>& p, const std::string& var = "x") {
    return poly_to_string<NumberFieldElem>(p, var, &format_coeff);
}

inline std::string to_string(const ExtRatFunc& f, const std::string& var = "x") {
    std::string num = to_string(f.num(), var);
    if (f.is_polynomial()) return num;
    std::string den = to_string(f.den(), var);
    if (num.find(' ') != std::string::npos) num = "(" + num + ")";
    if (den.find(' ') != std::string::npos || den.find('*') != std::string::npos)
        den = "(" + den + ")";
    return num + "/" + den;
}

inline CoeffFormat format_coeff_ratfunc(const RatFunc& c) {
    if (c.is_constant()) return format_coeff(c.constant_value());
    CoeffFormat f;
    const bool lead_neg = c.num().leading() < 0;
    f.negative = lead_neg;
    f.magnitude = to_string(lead_neg ? RatFunc(-c.num(), c.den()) : c);
    f.composite = f.magnitude.find(' ') != std::string::npos ||
                  f.magnitude.find('/') != std::string::npos ||
                  f.magnitude.find('*') != std::string::npos;
    return f;
}

inline CoeffFormat format_coeff_ext(const ExtRatFunc& c) {
    if (is_rational_ratfunc(c)) return format_coeff_ratfunc(to_ratfunc(c));
    CoeffFormat f;
    f.magnitude = to_string(c);
    f.composite = true;
    return f;
}

} // namespace quadsolv
