#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadsolv/diff_field.hpp"

#include "support/test_support.hpp"

using namespace quadsolv;
using qs_test::Rng;

namespace {

using PRF = RationalFunction<RatFunc>;

RatFunc rf_x() { return RatFunc(Polynomial<Rat>::variable()); }
RatFunc rf(int v) { return RatFunc(Rat(v)); }
PRF y() { return PRF::variable(); }
PRF lift(const RatFunc& c) { return PRF(c); }

// small integer or linear-in-x coefficient
RatFunc small_coeff(Rng& rng) {
    if (rng.range(0, 2) > 0) return RatFunc(Rat(rng.range(-3, 3)));
    return RatFunc(Polynomial<Rat>::from_coeffs({Rat(rng.range(-2, 2)), Rat(rng.range(-1, 1))}));
}

PRF random_prf(Rng& rng) {
    auto poly = [&](int max_deg) {
        std::vector<RatFunc> c;
        int d = rng.range(0, max_deg);
        for (int i = 0; i <= d; ++i) c.push_back(small_coeff(rng));
        return Polynomial<RatFunc>::from_coeffs(std::move(c));
    };
    while (true) {
        auto den = rng.range(0, 1) == 0 ? Polynomial<RatFunc>(RatFunc(Rat(1))) : poly(1);
        if (is_zero(den)) continue;
        return PRF(poly(2), den);
    }
}

RatFunc small_nonzero(Rng& rng) {
    while (true) {
        RatFunc f = small_coeff(rng);
        if (!is_zero(f)) return f;
    }
}

// Exact nullspace of an m x n rational matrix by Gauss-Jordan elimination.
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m, int cols) {
    int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m[i][c])) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        Rat inv = 1 / m[r][c];
        for (int j = 0; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rat f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rat>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = Rat(1);
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

TEST_CASE("derivation by regime") {
    RatFunc f(Polynomial<Rat>::from_coeffs({Rat(1), Rat(2)}));  // 1 + 2x

    ParametricRatFunc e1{y(), DerivationRegime::integral(f)};
    CHECK(derive(e1).elem == lift(f));

    ParametricRatFunc e2{y(), DerivationRegime::exp_integral(f)};
    CHECK(derive(e2).elem == lift(f) * y());

    // element of K: dR/dy = 0
    RatFunc a(Polynomial<Rat>::from_coeffs({Rat(0), Rat(0), Rat(1)}),
              Polynomial<Rat>::from_coeffs({Rat(1), Rat(1)}));  // x^2/(x+1)
    ParametricRatFunc e3{lift(a), DerivationRegime::integral(f)};
    CHECK(derive(e3).elem == lift(a.derivative()));
}

TEST_CASE("shift substitution") {
    auto reg = DerivationRegime::integral(rf_x());
    ParametricRatFunc e{y() * y(), reg};
    CHECK(substitute_shift(e, Rat(0)).elem == e.elem);
    // (y + 1)^2 = y^2 + 2y + 1
    CHECK(substitute_shift(e, Rat(1)).elem == y() * y() + lift(rf(2)) * y() + lift(rf(1)));

    ParametricRatFunc wrong{y(), DerivationRegime::exp_integral(rf(1))};
    CHECK_THROWS_AS(substitute_shift(wrong, Rat(1)), usage_error);

    // derive(substitute) == substitute(derive) on y^3 + x*y with f = x, rho = 2
    ParametricRatFunc g{y() * y() * y() + lift(rf_x()) * y(), reg};
    CHECK(derive(substitute_shift(g, Rat(2))).elem == substitute_shift(derive(g), Rat(2)).elem);
}

TEST_CASE("scale substitution") {
    auto reg = DerivationRegime::exp_integral(rf(1));
    ParametricRatFunc e{y() * y() + y(), reg};
    CHECK(substitute_scale(e, Rat(1)).elem == e.elem);
    CHECK(substitute_scale(e, Rat(3)).elem == lift(rf(9)) * y() * y() + lift(rf(3)) * y());
    CHECK_THROWS_AS(substitute_scale(e, Rat(0)), usage_error);

    ParametricRatFunc wrong{y(), DerivationRegime::integral(rf(1))};
    CHECK_THROWS_AS(substitute_scale(wrong, Rat(2)), usage_error);

    // derive(substitute) == substitute(derive) on x/y with f = 1, mu = 5
    ParametricRatFunc g{lift(rf_x()) / y(), reg};
    CHECK(derive(substitute_scale(g, Rat(5))).elem == substitute_scale(derive(g), Rat(5)).elem);
}

TEST_CASE("derive is additive and Leibnitz, randomized per regime") {
    Rng rng(808);
    for (int regime = 0; regime < 2; ++regime) {
        for (int i = 0; i < 200; ++i) {
            DerivationRegime reg = regime == 0
                                       ? DerivationRegime::integral(small_coeff(rng))
                                       : DerivationRegime::exp_integral(small_nonzero(rng));
            ParametricRatFunc a{random_prf(rng), reg};
            ParametricRatFunc b{random_prf(rng), reg};
            ParametricRatFunc sum{a.elem + b.elem, reg};
            ParametricRatFunc prod{a.elem * b.elem, reg};
            CHECK(derive(sum).elem == derive(a).elem + derive(b).elem);
            CHECK(derive(prod).elem == derive(a).elem * b.elem + a.elem * derive(b).elem);
        }
    }
}

TEST_CASE("Galois commutation with derive, randomized") {
    Rng rng(909);
    for (int i = 0; i < 100; ++i) {
        auto reg = DerivationRegime::integral(small_coeff(rng));
        ParametricRatFunc a{random_prf(rng), reg};
        Rat rho = rng.rat(5);
        CHECK(derive(substitute_shift(a, rho)).elem == substitute_shift(derive(a), rho).elem);
    }
    for (int i = 0; i < 100; ++i) {
        auto reg = DerivationRegime::exp_integral(small_nonzero(rng));
        ParametricRatFunc a{random_prf(rng), reg};
        Rat mu = rng.rat_nonzero(5);
        CHECK(derive(substitute_scale(a, mu)).elem == substitute_scale(derive(a), mu).elem);
    }
}

TEST_CASE("constants of the parametric derivations are exactly Q") {
    // For R = N/D with rational constant coefficients, R' = 0 forces
    // N_y D - N D_y = 0; for fixed D the solutions N form span{D}.
    Rng rng(1010);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> dc;
        int dd = rng.range(1, 3);
        for (int i = 0; i <= dd; ++i) dc.push_back(rng.rat(4));
        auto D = Polynomial<Rat>::from_coeffs(dc);
        if (is_zero(D) || D.degree() < 1) continue;

        // unknown N of degree <= 3: condition N'D - ND' = 0, a linear system
        const int nc = 4;
        auto Dp = D.derivative();
        std::vector<std::vector<Rat>> rows;
        const int max_deg = 3 + D.degree();
        for (int k = 0; k <= max_deg; ++k) rows.emplace_back(nc, Rat(0));
        for (int i = 0; i < nc; ++i) {
            // contribution of N = x^i
            auto Ni = Polynomial<Rat>::monomial(i, Rat(1));
            auto expr = Ni.derivative() * D - Ni * Dp;
            for (int k = 0; k <= expr.degree(); ++k) rows[static_cast<size_t>(k)][static_cast<size_t>(i)] = expr.coeff(k);
        }
        auto basis = nullspace(rows, nc);
        REQUIRE(basis.size() == 1);
        // the kernel element is proportional to D itself, i.e. R constant
        auto N = Polynomial<Rat>::from_coeffs(basis[0]);
        CHECK(is_zero(N.derivative() * D - N * Dp));
        auto q = divmod(N, D);
        CHECK(is_zero(q.second));
        CHECK(q.first.degree() == 0);
    }
}

TEST_CASE("tower validation") {
    CHECK(validate_tower(TowerDescriptor{}).steps.empty());

    // [Integral(1/x)] is a logarithm adjunction
    MultiRational inv_x(MultiPoly::constant(Rat(1)), MultiPoly::variable(0));
    auto t1 = validate_tower(TowerDescriptor{{TowerStep::integral(inv_x)}});
    CHECK(t1.steps.size() == 1);

    CHECK_THROWS_AS(validate_tower(TowerDescriptor{{TowerStep::exp_integral(MultiRational(0))}}),
                    validation_error);

    // a payload may only use generators already adjoined
    MultiRational uses_t1(MultiPoly::variable(1), MultiPoly::constant(Rat(1)));
    CHECK_THROWS_AS(validate_tower(TowerDescriptor{{TowerStep::integral(uses_t1)}}),
                    validation_error);
    TowerDescriptor ok{{TowerStep::integral(inv_x), TowerStep::exp_integral(uses_t1)}};
    CHECK(validate_tower(ok).steps.size() == 2);

    // algebraic step: w^2 - x, normalized monic
    auto mp = Polynomial<MultiRational>::from_coeffs(
        {MultiRational(MultiPoly::constant(Rat(0)) - MultiPoly::variable(0), MultiPoly::constant(Rat(1))),
         MultiRational(0), MultiRational(2)});
    auto t2 = validate_tower(TowerDescriptor{{TowerStep::algebraic(mp)}});
    REQUIRE(t2.steps.size() == 1);
    CHECK(t2.steps[0].minpoly.leading() == MultiRational(1));
    CHECK_THROWS_AS(validate_tower(TowerDescriptor{{TowerStep::algebraic(
                        Polynomial<MultiRational>(MultiRational(3)))}}),
                    validation_error);
}
