#pragma once

#include <optional>
#include <vector>

#include "quadsolv/diff_poly.hpp"

namespace quadsolv {

// Monic linear ODE y^(n) + a1*y^(n-1) + ... + an*y = 0; a[k-1] holds a_k.
template <class K>
struct LinearOdeT {
    std::vector<RationalFunction<K>> a;

    int order() const { return static_cast<int>(a.size()); }

    const RationalFunction<K>& coeff(int k) const {  // a_k, 1 <= k <= n
        return a.at(static_cast<size_t>(k - 1));
    }
};

using LinearOde = LinearOdeT<Rat>;
using ExtLinearOde = LinearOdeT<NumberFieldElem>;

inline LinearOde make_linear_ode(std::vector<RatFunc> coeffs) {
    if (coeffs.empty()) throw validation_error("linear equation needs order >= 1");
    return LinearOde{std::move(coeffs)};
}

// Homogeneous polynomial equation P(y, y', ..., y^(n)) = 0; the DiffPoly
// slot of order i stands for the variable x_i.
struct HomogeneousEq {
    DiffPoly p;
    int degree;
};

HomogeneousEq make_homogeneous(const DiffPoly& p);

struct RiccatiEq {
    DiffPoly lhs;  // equation lhs = 0
};

// D_0 = 1, D_{k+1} = dD_k/dx + u*D_k.  Memoized; thread-safe.
const DiffPoly& D(int n);

// D_n + a1*D_{n-1} + ... + an*D_0 = 0.
RiccatiEq riccati_of_linear(const LinearOde& L);

// P(D_0, ..., D_n) = 0.
RiccatiEq riccati_of_homogeneous(const HomogeneousEq& H);

// u solves the generalized Riccati equation iff exp(int u) solves L.
bool verify_log_derivative_correspondence(const LinearOde& L, const RatFunc& u);
bool verify_log_derivative_correspondence(const LinearOde& L, const ExtRatFunc& u);

// Reduction of order with a known Riccati solution u1 (y1 = exp(int u1)):
// the order n-1 monic equation for w = (y/y1)'.  Empty result marks the
// order-1 input, whose solutions are just c*y1.
std::optional<ExtLinearOde> reduce_order_ext(const LinearOde& L, const ExtRatFunc& u1);
std::optional<LinearOde> reduce_order(const LinearOde& L, const RatFunc& u1);

std::string to_string(const LinearOde& L, const std::string& sym = "y");
std::string to_string(const ExtLinearOde& L, const std::string& sym = "w");
std::string to_string(const RiccatiEq& R, const std::string& sym = "u");

} // namespace quadsolv
