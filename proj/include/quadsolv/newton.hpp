#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadsolv/number_field.hpp"
#include "quadsolv/puiseux.hpp"

namespace quadsolv {

// Bivariate curve P(y, z) = 0 with rational coefficients: main variable z,
// coefficients polynomials in y.
using CurvePoly = Polynomial<Polynomial<Rat>>;

struct AlgebraicCurve {
    CurvePoly p;
    int degree_z() const { return p.degree(); }
};

AlgebraicCurve make_algebraic_curve(CurvePoly p);

// One Puiseux expansion class of z at y = infinity.  The series stands for
// its whole conjugacy class: ramification p accounts for the theta -> zeta
// theta cycle, multiplicity for algebraic conjugacy of the coefficients.
struct Branch {
    PuiseuxSeries<NumberFieldElem> series;  // descending powers of y
    int ramification = 1;
    NumberFieldPtr field;
    long multiplicity = 1;
    bool exact = false;
};

struct ExpansionResult {
    std::vector<Branch> branches;
    bool squarefree_reduced = false;  // input had a repeated z-factor
    int degree = 0;                   // deg_z of the squarefree part
};

// All branches at y = infinity: substitutes y = 1/s, clears denominators,
// and runs the Newton-polygon iteration at s = 0.  Coefficients live in
// number fields grown by adjoin_root under the given degree bound.  terms
// counts nonzero series coefficients per branch.
ExpansionResult expand_at_infinity(const AlgebraicCurve& c, int terms, int degree_bound = 12);

struct CertifyResult {
    bool passed = false;
    // valuation bound of P(y, series): the exact leading exponent on
    // failure, the uncertified-region bound on success, nothing when the
    // residual is exactly zero.
    std::optional<Rat> residual_valuation;
    bool exact_zero = false;
};

CertifyResult certify_branch(const AlgebraicCurve& c, const Branch& b);

std::string to_string(const Branch& b, const std::string& var = "y");

} // namespace quadsolv
