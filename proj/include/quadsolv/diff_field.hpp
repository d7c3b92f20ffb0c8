#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadsolv/printing.hpp"
#include "quadsolv/rational_function.hpp"

namespace quadsolv {

// ---- base differential field -------------------------------------------

// Tag for the two concrete base fields: algebraic constants with the zero
// derivation, or Q(x) with d/dx.
struct BaseDiffField {
    enum class Kind { constants, rational_functions } kind;
    NumberFieldPtr constant_field;  // meaningful for Kind::constants

    static BaseDiffField constants(NumberFieldPtr f) { return {Kind::constants, std::move(f)}; }
    static BaseDiffField rational_functions() { return {Kind::rational_functions, nullptr}; }
};

// ---- parametric derivations on K(y) --------------------------------------

enum class RegimeKind { integral, exp_integral };

// Integral: y' = f.  ExpIntegral: y' = f*y (f nonzero).
struct DerivationRegime {
    RegimeKind kind;
    RatFunc f;

    static DerivationRegime integral(RatFunc f) { return {RegimeKind::integral, std::move(f)}; }
    static DerivationRegime exp_integral(RatFunc f) {
        if (is_zero(f)) throw validation_error("exponential-of-integral regime needs nonzero f");
        return {RegimeKind::exp_integral, std::move(f)};
    }
};

inline bool operator==(const DerivationRegime& a, const DerivationRegime& b) {
    return a.kind == b.kind && a.f == b.f;
}

// Rational function in the transcendental y over Q(x), carrying the regime
// that defines its derivation.
struct ParametricRatFunc {
    RationalFunction<RatFunc> elem;  // main variable y, coefficients in Q(x)
    DerivationRegime regime;
};

// The derivation R' = dR/dx + (dR/dy) * w with w = f or f*y per the regime.
ParametricRatFunc derive(const ParametricRatFunc& e);

// y -> y + rho (integral regime only).
ParametricRatFunc substitute_shift(const ParametricRatFunc& e, const Rat& rho);

// y -> mu * y (exponential-of-integral regime only, mu nonzero).
ParametricRatFunc substitute_scale(const ParametricRatFunc& e, const Rat& mu);

std::string to_string(const ParametricRatFunc& e, const std::string& var = "y");

// ---- extension tower descriptors -----------------------------------------

// Sparse multivariate polynomial over Q in x (index 0) and tower
// generators t1, t2, ... (indices 1..).  Only the little arithmetic tower
// descriptors need: no gcds, no factorization.
struct MultiPoly {
    std::map<std::vector<int>, Rat> terms;  // exponent vectors, trailing zeros trimmed

    static MultiPoly constant(const Rat& c);
    static MultiPoly variable(int index);

    bool is_zero_poly() const { return terms.empty(); }
    int max_var() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms == b.terms; }
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero_poly(); }
std::string to_string(const MultiPoly& p);

// Formal fraction of multivariate polynomials; canonicalized only up to
// shared polynomial factors (denominator made integer-primitive with a
// positive leading term).
struct MultiRational {
    MultiPoly num, den;

    MultiRational() : num(), den(MultiPoly::constant(Rat(1))) {}
    MultiRational(int v) : MultiRational(Rat(v)) {}
    MultiRational(const Rat& v) : num(MultiPoly::constant(v)), den(MultiPoly::constant(Rat(1))) {}
    MultiRational(MultiPoly n, MultiPoly d);

    bool is_zero_value() const { return num.is_zero_poly(); }
    int max_var() const { return std::max(num.max_var(), den.max_var()); }

    MultiRational operator-() const;
    friend MultiRational operator+(const MultiRational& a, const MultiRational& b);
    friend MultiRational operator-(const MultiRational& a, const MultiRational& b);
    friend MultiRational operator*(const MultiRational& a, const MultiRational& b);
    friend MultiRational operator/(const MultiRational& a, const MultiRational& b);
    friend bool operator==(const MultiRational& a, const MultiRational& b);
    friend bool operator!=(const MultiRational& a, const MultiRational& b) { return !(a == b); }
};

inline bool is_zero(const MultiRational& f) { return f.is_zero_value(); }
std::string to_string(const MultiRational& f);

// One extension step; the payload may reference x and earlier generators.
struct TowerStep {
    enum class Kind { algebraic, integral, exp_integral };
    Kind kind;
    MultiRational f;                      // integral / exp_integral payload
    Polynomial<MultiRational> minpoly;    // algebraic payload, variable w

    static TowerStep integral(MultiRational f) { return {Kind::integral, std::move(f), {}}; }
    static TowerStep exp_integral(MultiRational f) { return {Kind::exp_integral, std::move(f), {}}; }
    static TowerStep algebraic(Polynomial<MultiRational> m) { return {Kind::algebraic, {}, std::move(m)}; }
};

struct TowerDescriptor {
    std::vector<TowerStep> steps;
};

// Checks each step's payload against the variables available at that depth,
// normalizes payloads, and returns the canonical descriptor.
TowerDescriptor validate_tower(const TowerDescriptor& t);

std::string step_kind_name(TowerStep::Kind k);

} // namespace quadsolv
