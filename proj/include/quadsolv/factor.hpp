#pragma once

#include <utility>
#include <vector>

#include "quadsolv/polynomial.hpp"

namespace quadsolv {

struct Factorization {
    Rat unit;  // p = unit * prod factors[i].first ^ factors[i].second
    std::vector<std::pair<Polynomial<Rat>, int>> factors;  // monic, irreducible over Q
};

// Complete factorization over Q: squarefree decomposition, rational root
// extraction, then Kronecker's interpolation method for the remaining
// factors.  Degrees above the bound raise capability_error.
Factorization factor_over_q(const Polynomial<Rat>& p, int degree_bound = 16);

// True when p (of degree >= 1) is irreducible over Q.
bool is_irreducible_over_q(const Polynomial<Rat>& p, int degree_bound = 16);

} // namespace quadsolv
