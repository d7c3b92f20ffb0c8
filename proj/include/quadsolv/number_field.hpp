#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "quadsolv/factor.hpp"
#include "quadsolv/polynomial.hpp"

namespace quadsolv {

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Simple algebraic number field Q[a]/(minpoly), minpoly monic irreducible.
// Q itself is the degree-1 field with minpoly x.  Immutable and shared.
class NumberField {
public:
    static NumberFieldPtr rationals();

    // Caller guarantees irreducibility (internal constructions).
    static NumberFieldPtr make_unchecked(Polynomial<Rat> monic_irreducible);

    // Validates monic normalization and irreducibility over Q.
    static NumberFieldPtr make_checked(const Polynomial<Rat>& minpoly, int degree_bound = 16);

    const Polynomial<Rat>& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    bool is_rational() const { return degree() == 1; }

    // Degree-1 fields are copies of Q; the generator is this rational value.
    Rat generator_value() const;

private:
    explicit NumberField(Polynomial<Rat> m) : minpoly_(std::move(m)) {}
    Polynomial<Rat> minpoly_;
};

bool same_field(const NumberFieldPtr& a, const NumberFieldPtr& b);

class NumberFieldElem {
public:
    NumberFieldElem() : NumberFieldElem(Rat(0)) {}
    NumberFieldElem(Rat v);
    NumberFieldElem(int v) : NumberFieldElem(Rat(v)) {}
    NumberFieldElem(NumberFieldPtr field, Polynomial<Rat> residue);

    static NumberFieldElem generator(const NumberFieldPtr& field);

    const NumberFieldPtr& field() const { return field_; }
    const Polynomial<Rat>& residue() const { return residue_; }

    bool is_zero_elem() const { return is_zero(residue_); }
    bool is_rational_value() const;
    Rat rational_value() const;  // throws unless representable over Q

    NumberFieldElem operator-() const { return {field_, -residue_}; }
    friend NumberFieldElem operator+(NumberFieldElem a, NumberFieldElem b);
    friend NumberFieldElem operator-(NumberFieldElem a, NumberFieldElem b);
    friend NumberFieldElem operator*(NumberFieldElem a, NumberFieldElem b);
    friend NumberFieldElem operator/(NumberFieldElem a, NumberFieldElem b);
    NumberFieldElem& operator+=(const NumberFieldElem& o) { return *this = *this + o; }
    NumberFieldElem& operator-=(const NumberFieldElem& o) { return *this = *this - o; }
    NumberFieldElem& operator*=(const NumberFieldElem& o) { return *this = *this * o; }

    NumberFieldElem inverse() const;
    friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b);
    friend bool operator!=(const NumberFieldElem& a, const NumberFieldElem& b) { return !(a == b); }

    // Promotes elements of mismatched fields: rational values embed anywhere,
    // otherwise the minpolys must agree.
    static void unify(NumberFieldElem& a, NumberFieldElem& b);

private:
    NumberFieldPtr field_;
    Polynomial<Rat> residue_;  // degree < field degree
};

inline bool is_zero(const NumberFieldElem& e) { return e.is_zero_elem(); }
inline NumberFieldElem exact_div(const NumberFieldElem& a, const NumberFieldElem& b) { return a / b; }

// Image of e under the homomorphism sending its field generator to gen_image.
NumberFieldElem apply_generator_image(const NumberFieldElem& e, const NumberFieldElem& gen_image);

// Trace to Q of an element (sum over the conjugates of its field).
Rat field_trace(const NumberFieldElem& e);

Polynomial<NumberFieldElem> lift_poly(const Polynomial<Rat>& p, const NumberFieldPtr& field);
Polynomial<NumberFieldElem> map_poly(const Polynomial<NumberFieldElem>& p,
                                     const NumberFieldElem& gen_image);

struct FieldFactorization {
    NumberFieldElem unit;
    std::vector<std::pair<Polynomial<NumberFieldElem>, int>> factors;  // monic irreducible
};

// Trager's method: factorization via squarefree shifted norms and their
// factorization over Q.
FieldFactorization factor_over_field(const Polynomial<NumberFieldElem>& f,
                                     int norm_degree_cap = 64);

// Roots of f lying in its own coefficient field.
std::vector<NumberFieldElem> roots_in_field(const Polynomial<NumberFieldElem>& f);

struct AdjoinRootResult {
    NumberFieldPtr field;
    NumberFieldElem root;                 // root of m inside field
    NumberFieldElem base_generator_image; // image of the base generator
    bool grew = false;
};

// Field descriptor containing a root of m.  Factors m over the base field;
// a linear factor means no growth, otherwise the compositum is built on a
// primitive element whose minimal polynomial comes from resultant
// elimination.  Total degree above degree_bound raises capability_error.
AdjoinRootResult adjoin_root(const NumberFieldPtr& base, const Polynomial<NumberFieldElem>& m,
                             int degree_bound = 12);
AdjoinRootResult adjoin_root(const NumberFieldPtr& base, const Polynomial<Rat>& m,
                             int degree_bound = 12);

std::string to_string(const NumberFieldElem& e, const std::string& sym = "a");
std::string field_to_string(const NumberFieldPtr& f, const std::string& sym = "a");

// Deterministic ordering inside one field (lexicographic on residues).
bool canonical_less(const NumberFieldElem& a, const NumberFieldElem& b);

} // namespace quadsolv
