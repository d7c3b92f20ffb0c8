#pragma once

#include <string>
#include <utility>

#include "quadsolv/number_field.hpp"
#include "quadsolv/polynomial.hpp"

namespace quadsolv {

// Reduced quotient of polynomials over a field K: gcd(num, den) = 1 and den
// monic.  The main variable is the one being differentiated (d/dx); K
// coefficients are constants for that derivation.
template <class K>
class RationalFunction {
public:
    RationalFunction() : num_(), den_{K(1)} {}
    RationalFunction(K constant) : num_(std::move(constant)), den_{K(1)} {}
    RationalFunction(int v) : RationalFunction(K(v)) {}
    RationalFunction(Polynomial<K> p) : num_(std::move(p)), den_{K(1)} {}

    RationalFunction(Polynomial<K> n, Polynomial<K> d) : num_(std::move(n)), den_(std::move(d)) {
        if (is_zero(den_)) throw usage_error("rational function with zero denominator");
        reduce();
    }

    static RationalFunction variable() { return RationalFunction(Polynomial<K>::variable()); }

    const Polynomial<K>& num() const { return num_; }
    const Polynomial<K>& den() const { return den_; }

    bool is_zero_value() const { return is_zero(num_); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    K constant_value() const {
        if (!is_constant()) throw usage_error("rational function is not constant");
        return num_.coeff(0);
    }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, unchecked{}); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        // common denominator through the gcd keeps the final reduction small
        auto g = poly_gcd(a.den_, b.den_);
        if (g.degree() == 0)
            return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        auto bq = exact_div(b.den_, g);
        return RationalFunction(a.num_ * bq + b.num_ * exact_div(a.den_, g), a.den_ * bq);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        // cross-cancellation; the factors are already reduced, so the result is too
        auto g1 = poly_gcd(a.num_, b.den_);
        auto g2 = poly_gcd(b.num_, a.den_);
        Polynomial<K> n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
        Polynomial<K> d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
        RationalFunction r(std::move(n), std::move(d), unchecked{});
        r.make_monic_den();
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero_value()) throw usage_error("rational function division by zero");
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (is_zero_value()) throw usage_error("inverse of the zero rational function");
        RationalFunction r(den_, num_, unchecked{});
        r.make_monic_den();
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // d/dx by the quotient rule; K coefficients are constants.
    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K evaluate(const K& x) const {
        K d = den_.evaluate(x);
        if (is_zero(d)) throw usage_error("evaluation at a pole");
        return num_.evaluate(x) / d;
    }

private:
    struct unchecked {};
    RationalFunction(Polynomial<K> n, Polynomial<K> d, unchecked) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (is_zero(num_)) {
            den_ = Polynomial<K>{K(1)};
            return;
        }
        if (den_.degree() > 0 && num_.degree() > 0) {
            auto g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        make_monic_den();
    }

    void make_monic_den() {
        if (!(den_.leading() == K(1))) {
            K lead_inv = K(1) / den_.leading();
            num_ = lead_inv * num_;
            den_ = lead_inv * den_;
        }
    }

    Polynomial<K> num_, den_;
};

template <class K>
bool is_zero(const RationalFunction<K>& f) {
    return f.is_zero_value();
}

template <class K>
RationalFunction<K> exact_div(const RationalFunction<K>& a, const RationalFunction<K>& b) {
    return a / b;
}

template <class K>
RationalFunction<K> pow(const RationalFunction<K>& f, long e) {
    if (e < 0) return ring_pow(f.inverse(), -e);
    return ring_pow(f, e);
}

// ---- gcd in Q(x)[y] ---------------------------------------------------
//
// The generic Euclidean gcd is correct over any field but suffers severe
// coefficient growth when the field is itself Q(x).  Clearing denominators
// and running a primitive pseudo-remainder sequence in Q[x][y] keeps the
// intermediate degrees small.

namespace detail {

using BiPoly = Polynomial<Polynomial<Rat>>;  // main variable y, coefficients in Q[x]

inline BiPoly clear_denominators(const Polynomial<RationalFunction<Rat>>& p) {
    Polynomial<Rat> common{Rat(1)};
    for (int i = 0; i <= p.degree(); ++i) {
        const Polynomial<Rat> d = p.coeff(i).den();
        auto g = poly_gcd(common, d);
        common = common * exact_div(d, g);
    }
    std::vector<Polynomial<Rat>> c;
    for (int i = 0; i <= p.degree(); ++i) {
        const auto term = p.coeff(i);
        c.push_back(term.num() * exact_div(common, term.den()));
    }
    return BiPoly::from_coeffs(std::move(c));
}

inline Polynomial<Rat> bipoly_content(const BiPoly& p) {
    Polynomial<Rat> g;
    for (int i = 0; i <= p.degree(); ++i) {
        const auto c = p.coeff(i);
        if (is_zero(c)) continue;
        g = is_zero(g) ? monic(c) : poly_gcd(g, c);
    }
    return g;
}

inline BiPoly primitive_part_y(const BiPoly& p) {
    if (is_zero(p)) return p;
    auto g = bipoly_content(p);
    std::vector<Polynomial<Rat>> c;
    for (int i = 0; i <= p.degree(); ++i) c.push_back(exact_div(p.coeff(i), g));
    return BiPoly::from_coeffs(std::move(c));
}

} // namespace detail

// Monic gcd in Q(x)[y] via a primitive pseudo-remainder sequence.
inline Polynomial<RationalFunction<Rat>> poly_gcd(const Polynomial<RationalFunction<Rat>>& a,
                                                  const Polynomial<RationalFunction<Rat>>& b) {
    using K = RationalFunction<Rat>;
    if (is_zero(a)) return monic(b);
    if (is_zero(b)) return monic(a);
    detail::BiPoly x = detail::primitive_part_y(detail::clear_denominators(a));
    detail::BiPoly y = detail::primitive_part_y(detail::clear_denominators(b));
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!is_zero(y)) {
        detail::BiPoly r = detail::pseudo_remainder(x, y);
        x = y;
        y = detail::primitive_part_y(r);
    }
    std::vector<K> c;
    for (int i = 0; i <= x.degree(); ++i) c.emplace_back(x.coeff(i));
    return monic(Polynomial<K>::from_coeffs(std::move(c)));
}

// Derivations of the concrete coefficient fields: constants have the zero
// derivation, rational functions differentiate in x.
inline Rat derive(const Rat&) { return Rat(0); }
inline NumberFieldElem derive(const NumberFieldElem&) { return NumberFieldElem(Rat(0)); }
template <class K>
RationalFunction<K> derive(const RationalFunction<K>& f) {
    return f.derivative();
}

// The base differential field K = Q(x).
using RatFunc = RationalFunction<Rat>;

// Rational functions of x with algebraic-constant coefficients; the
// workhorse coefficient field once extensions enter the picture.
using ExtRatFunc = RationalFunction<NumberFieldElem>;

inline ExtRatFunc lift_to_ext(const RatFunc& f) {
    auto lift = [](const Polynomial<Rat>& p) {
        std::vector<NumberFieldElem> c;
        for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p.coeff(i));
        return Polynomial<NumberFieldElem>::from_coeffs(std::move(c));
    };
    return ExtRatFunc(lift(f.num()), lift(f.den()));
}

inline ExtRatFunc ext_constant(const NumberFieldElem& c) { return ExtRatFunc(c); }

inline bool is_rational_ratfunc(const ExtRatFunc& f) {
    for (int i = 0; i <= f.num().degree(); ++i)
        if (!f.num().coeff(i).is_rational_value()) return false;
    for (int i = 0; i <= f.den().degree(); ++i)
        if (!f.den().coeff(i).is_rational_value()) return false;
    return true;
}

inline RatFunc to_ratfunc(const ExtRatFunc& f) {
    auto drop = [](const Polynomial<NumberFieldElem>& p) {
        std::vector<Rat> c;
        for (int i = 0; i <= p.degree(); ++i) {
            if (!p.coeff(i).is_rational_value())
                throw usage_error("coefficients do not collapse into Q(x)");
            c.push_back(p.coeff(i).rational_value());
        }
        return Polynomial<Rat>::from_coeffs(std::move(c));
    };
    return RatFunc(drop(f.num()), drop(f.den()));
}

} // namespace quadsolv
