#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "quadsolv/errors.hpp"
#include "quadsolv/rational.hpp"

namespace quadsolv {

// Miller-Rabin primality test, deterministic for the magnitudes this
// library meets (fixed witness set, probabilistic far beyond 3e24).
bool is_probable_prime(const Int& n);

// Prime factorization of |n| by trial division plus Brent-Pollard rho.
std::map<Int, int> factor_integer(const Int& n);

// All positive divisors of |n|, ascending.  Throws capability_error when
// the divisor count exceeds max_divisors.
std::vector<Int> divisors(const Int& n, size_t max_divisors = 100000);

} // namespace quadsolv
