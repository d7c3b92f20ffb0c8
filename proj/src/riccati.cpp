#include "quadsolv/riccati.hpp"

#include <deque>
#include <mutex>
#include <sstream>

namespace quadsolv {

HomogeneousEq make_homogeneous(const DiffPoly& p) {
    if (is_zero(p)) throw validation_error("homogeneous equation must be a nonzero polynomial");
    int deg = -1;
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        if (deg < 0) deg = m.total_degree();
        if (m.total_degree() != deg)
            throw validation_error("polynomial is not homogeneous: monomials of degree " +
                                   std::to_string(deg) + " and " + std::to_string(m.total_degree()));
    }
    return {p, deg};
}

const DiffPoly& D(int n) {
    if (n < 0) throw usage_error("D(n) needs n >= 0");
    // deque keeps references to cached entries stable across growth
    static std::deque<DiffPoly> cache{DiffPoly::constant(RatFunc(Rat(1)))};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(cache.back().total_derivative() + DiffPoly::u(0) * cache.back());
    return cache[static_cast<size_t>(n)];
}

RiccatiEq riccati_of_linear(const LinearOde& L) {
    const int n = L.order();
    DiffPoly acc = D(n);
    for (int k = 1; k <= n; ++k) acc += L.coeff(k) * D(n - k);
    return {acc};
}

RiccatiEq riccati_of_homogeneous(const HomogeneousEq& H) {
    DiffPoly acc;
    for (const auto& [m, c] : H.p.terms()) {
        DiffPoly term = DiffPoly::constant(c);
        for (const auto& [ord, e] : m.exps) term *= pow(D(ord), e);
        acc += term;
    }
    return {acc};
}

bool verify_log_derivative_correspondence(const LinearOde& L, const RatFunc& u) {
    return is_zero(substitute(riccati_of_linear(L).lhs, u));
}

bool verify_log_derivative_correspondence(const LinearOde& L, const ExtRatFunc& u) {
    return is_zero(substitute(riccati_of_linear(L).lhs, u));
}

namespace {
Rat binomial(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    Rat r(1);
    for (int i = 1; i <= k; ++i) r = r * Rat(n - k + i) / Rat(i);
    return r;
}
} // namespace

std::optional<ExtLinearOde> reduce_order_ext(const LinearOde& L, const ExtRatFunc& u1) {
    const int n = L.order();

    // c_j collects the v^(j) coefficient of the substituted equation, using
    // y = y1*v and y^(k) = sum_j C(k,j) D_{k-j}(u1) y1 v^(j).
    std::vector<ExtRatFunc> dk;
    for (int k = 0; k <= n; ++k) dk.push_back(substitute(D(k), u1));

    auto a_lifted = [&](int i) -> ExtRatFunc {
        if (i == 0) return ExtRatFunc(NumberFieldElem(Rat(1)));
        return lift_to_ext(L.coeff(i));
    };

    std::vector<ExtRatFunc> c(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        ExtRatFunc acc;
        for (int i = 0; i + j <= n; ++i)
            acc += a_lifted(i) * ExtRatFunc(NumberFieldElem(binomial(n - i, j))) * dk[static_cast<size_t>(n - i - j)];
        c[static_cast<size_t>(j)] = acc;
    }

    if (!is_zero(c[0]))
        throw usage_error("u1 does not solve the generalized Riccati equation; residual = " +
                          to_string(c[0]));
    if (n == 1) return std::nullopt;

    // c_n = 1, so the reduced equation for w = v' is already monic.
    std::vector<ExtRatFunc> b(static_cast<size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k) b[static_cast<size_t>(k - 1)] = c[static_cast<size_t>(n - k)];
    return ExtLinearOde{std::move(b)};
}

std::optional<LinearOde> reduce_order(const LinearOde& L, const RatFunc& u1) {
    auto ext = reduce_order_ext(L, lift_to_ext(u1));
    if (!ext) return std::nullopt;
    std::vector<RatFunc> b;
    for (const auto& coeff : ext->a) b.push_back(to_ratfunc(coeff));
    return LinearOde{std::move(b)};
}

namespace {
template <class K>
std::string linear_ode_string(const LinearOdeT<K>& L, const std::string& sym,
                              CoeffFormat (*fmt)(const RationalFunction<K>&)) {
    const int n = L.order();
    std::ostringstream os;
    os << derivative_symbol(sym, n);
    for (int k = 1; k <= n; ++k) {
        const auto& c = L.coeff(k);
        if (is_zero(c)) continue;
        CoeffFormat f = fmt(c);
        os << (f.negative ? " - " : " + ");
        if (!f.is_one) os << (f.composite ? "(" + f.magnitude + ")" : f.magnitude) << "*";
        os << derivative_symbol(sym, n - k);
    }
    os << " = 0";
    return os.str();
}
} // namespace

std::string to_string(const LinearOde& L, const std::string& sym) {
    return linear_ode_string<Rat>(L, sym, [](const RatFunc& c) { return format_coeff_ratfunc(c); });
}

std::string to_string(const ExtLinearOde& L, const std::string& sym) {
    return linear_ode_string<NumberFieldElem>(L, sym,
                                              [](const ExtRatFunc& c) { return format_coeff_ext(c); });
}

std::string to_string(const RiccatiEq& R, const std::string& sym) {
    return to_string(R.lhs, sym) + " = 0";
}

} // namespace quadsolv
