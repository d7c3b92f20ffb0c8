#pragma once

#include <vector>

#include "quadsolv/rational_function.hpp"

namespace quadsolv {

// All rational solutions u of u' + u^2 + a1*u + a2 = 0, found by local
// principal-part analysis at the poles of the normalized potential and at
// infinity, followed by a polynomial linear solve and exact verification.
// Continuous families are represented by the member with free parameters
// set to zero.  Even poles of order >= 4 at non-rational points are beyond
// this search and raise capability_error.
std::vector<RatFunc> rational_riccati_solutions(const RatFunc& a1, const RatFunc& a2,
                                                int sign_site_cap = 20);

} // namespace quadsolv
