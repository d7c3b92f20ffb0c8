#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadsolv/puiseux.hpp"

#include "support/test_support.hpp"

using namespace quadsolv;
using qs_test::Rng;

namespace {

using S = PuiseuxSeries<RatFunc>;

RatFunc rf(int v) { return RatFunc(Rat(v)); }
RatFunc rf_x() { return RatFunc(Polynomial<Rat>::variable()); }

S random_series(Rng& rng, std::optional<DerivationRegime> reg, bool exact = true) {
    int ram = rng.range(1, 3);
    S s;
    int n = rng.range(1, 4);
    long top = rng.range(-3, 4);
    for (int i = 0; i < n; ++i) {
        RatFunc c = rng.ratfunc(1);
        if (is_zero(c)) continue;
        s += S::monomial(c, top - i, ram);
    }
    if (!exact) s = s.with_floor(top - n, ram);
    if (reg) s = s.with_regime(*reg);
    return s;
}

} // namespace

TEST_CASE("series arithmetic basics") {
    // theta^(1/2) * theta^(1/2) = theta
    S half = S::monomial(rf(1), 1, 2);
    CHECK((half * half).normalized() == S::monomial(rf(1), 1, 1));

    // a + (-a) = 0 with the floor preserved
    Rng rng(121);
    S a = random_series(rng, std::nullopt, false);
    S z = a + (-a);
    CHECK(z.is_zero_marker());
    CHECK(z.floor() == a.floor());
}

TEST_CASE("geometric series inverse") {
    // (1 + theta^-1)^-1 = 1 - theta^-1 + theta^-2 - ... down to the floor
    S s = S::monomial(rf(1), 0, 1) + S::monomial(rf(1), -1, 1);
    S inv = s.invert(Rat(-5));
    S expected;
    for (long k = 0; k >= -4; --k) expected += S::monomial(rf(k % 2 == 0 ? 1 : -1), k, 1);
    expected = expected.with_floor(-5, 1);
    CHECK(inv == expected);
    CHECK((inv * s).has_terms());
    CHECK((inv * s).leading()->j == 0);

    // exact monomials invert exactly
    S mono = S::monomial(rf(2), 3, 2);
    CHECK(mono.invert().is_exact());
    CHECK((mono.invert() * mono) == S::monomial(rf(1), 0, 2));

    // exact multi-term series need a target floor
    CHECK_THROWS_AS(s.invert(), usage_error);
    // a zero-marker has no certified leading term
    S marker = S().with_floor(-5, 1);
    CHECK_THROWS_AS(marker.invert(), truncation_error);
    CHECK_THROWS_AS(S().invert(), usage_error);
}

TEST_CASE("derivation in the integral regime") {
    auto reg = DerivationRegime::integral(rf_x());
    // c(x)*theta^(1/2) -> c'*theta^(1/2) + (1/2)*c*f*theta^(-1/2)
    RatFunc c = rf_x() * rf_x();  // x^2
    S s = S::monomial(c, 1, 2).with_regime(reg);
    S ds = s.derive_series();
    S expected = (S::monomial(c.derivative(), 1, 2) +
                  S::monomial(RatFunc(Rat(1, 2)) * c * rf_x(), -1, 2))
                     .with_regime(reg);
    CHECK(ds == expected);

    // constants of the base field differentiate in place
    S k = S::constant(c).with_regime(reg);
    CHECK(k.derive_series() == S::constant(c.derivative()).with_regime(reg));
}

TEST_CASE("derivation in the exponential-of-integral regime") {
    auto reg = DerivationRegime::exp_integral(rf(1));
    // c*theta^(k/p) -> (c' + (k/p) c) * theta^(k/p) for f = 1
    RatFunc c = rf_x();
    S s = S::monomial(c, 2, 3).with_regime(reg);
    S expected = S::monomial(c.derivative() + RatFunc(Rat(2, 3)) * c, 2, 3).with_regime(reg);
    CHECK(s.derive_series() == expected);
}

TEST_CASE("substitute a series into a differential polynomial") {
    auto reg = DerivationRegime::integral(rf_x());
    DiffPoly t = DiffPoly::u(1) + DiffPoly::u(0) * DiffPoly::u(0);
    S theta = S::monomial(rf(1), 1, 1).with_regime(reg);
    // theta' = f, so u' + u^2 -> f + theta^2
    S expected = (S::monomial(rf(1), 2, 1) + S::constant(rf_x())).with_regime(reg);
    CHECK(substitute_into_diffpoly(t, theta) == expected);

    CHECK(substitute_into_diffpoly(DiffPoly::u(0), theta) == theta);

    // u^2 - c: positive leading degree squares the leading term
    S s = (S::monomial(rf(3), 1, 2) + S::monomial(rf(5), 0, 2)).with_regime(reg);
    DiffPoly t2 = DiffPoly::u(0) * DiffPoly::u(0) - DiffPoly::constant(rf(7));
    auto lead = substitute_into_diffpoly(t2, s).leading();
    REQUIRE(lead.has_value());
    CHECK(lead->j == 2);
    CHECK(lead->ram == 2);
    CHECK(lead->coeff == rf(9));
}

TEST_CASE("leading term extraction") {
    S a = S::monomial(rf(1), 1, 2) + S::constant(rf(1));
    auto l = a.leading();
    REQUIRE(l.has_value());
    CHECK(Rat(l->j, l->ram) == Rat(1, 2));
    CHECK(l->coeff == rf(1));

    S marker = S().with_floor(-5, 1);
    CHECK_FALSE(marker.leading().has_value());
    CHECK(marker.is_zero_marker());
    CHECK(*marker.floor() == -5);

    S b = S::monomial(RatFunc(Rat(3)) * rf_x(), 2, 1) + S::monomial(rf(1), 1, 1);
    CHECK(b.leading()->j == 2);
    CHECK(b.leading()->coeff == RatFunc(Rat(3)) * rf_x());
}

TEST_CASE("derive_series is additive and Leibnitz, randomized") {
    Rng rng(232);
    for (int regime = 0; regime < 2; ++regime) {
        for (int i = 0; i < 100; ++i) {
            DerivationRegime reg = regime == 0
                                       ? DerivationRegime::integral(rng.ratfunc(1))
                                       : DerivationRegime::exp_integral(rng.ratfunc_nonzero(1));
            S a = random_series(rng, reg);
            S b = random_series(rng, reg);
            CHECK((a + b).derive_series() == a.derive_series() + b.derive_series());
            CHECK((a * b).derive_series() ==
                  a.derive_series() * b + a * b.derive_series());
        }
    }
}

TEST_CASE("leading-exponent behavior of derivatives (integral regime)") {
    Rng rng(343);
    for (int i = 0; i < 100; ++i) {
        auto reg = DerivationRegime::integral(rng.ratfunc_nonzero(1));
        S a = random_series(rng, reg);
        if (!a.has_terms()) continue;
        auto la = a.leading();
        S d = a.derive_series();
        for (int step = 0; step < 3; ++step) {
            if (!d.has_terms()) break;
            auto ld = d.leading();
            // derivatives of any order never raise the leading exponent
            CHECK(Rat(ld->j, ld->ram) <= Rat(la->j, la->ram));
            d = d.derive_series();
        }
        // first derivative: leading coefficient c' survives iff nonzero
        auto c1 = derive(la->coeff);
        S d1 = a.derive_series();
        if (!is_zero(c1)) {
            REQUIRE(d1.has_terms());
            CHECK(Rat(d1.leading()->j, d1.leading()->ram) == Rat(la->j, la->ram));
            CHECK(d1.leading()->coeff == c1);
        } else if (d1.has_terms()) {
            CHECK(Rat(d1.leading()->j, d1.leading()->ram) < Rat(la->j, la->ram));
        }
    }
}

TEST_CASE("leading-exponent behavior of derivatives (exp-integral regime)") {
    Rng rng(454);
    for (int i = 0; i < 100; ++i) {
        auto reg = DerivationRegime::exp_integral(rng.ratfunc_nonzero(1));
        S a = random_series(rng, reg);
        if (!a.has_terms()) continue;
        auto la = a.leading();
        S d = a.derive_series();
        if (d.has_terms())
            CHECK(Rat(d.leading()->j, d.leading()->ram) <= Rat(la->j, la->ram));
        // the candidate leading coefficient is c' + (k/p) f c
        RatFunc cand = derive(la->coeff) + RatFunc(Rat(la->j, la->ram)) * reg.f * la->coeff;
        if (!is_zero(cand)) {
            REQUIRE(d.has_terms());
            CHECK(d.leading()->coeff == cand);
            CHECK(Rat(d.leading()->j, d.leading()->ram) == Rat(la->j, la->ram));
        }
    }
}

TEST_CASE("ramification re-indexing round-trips") {
    Rng rng(565);
    for (int i = 0; i < 50; ++i) {
        S a = random_series(rng, std::nullopt).normalized();
        int k = rng.range(2, 4);
        CHECK(a.with_ram(a.ram() * k).normalized() == a);
    }
}

TEST_CASE("series rendering") {
    S s = S::monomial(rf(2), 2, 3) + S::monomial(rf(1), 1, 3);
    CHECK(to_string(s, "t") == "2*t^(2/3) + t^(1/3)");
    S t = (S::monomial(rf(1), 1, 1) + S::monomial(RatFunc(Rat(1, 2)), -1, 1)).with_floor(-3, 1);
    CHECK(to_string(t, "y") == "y + (1/2)*y^(-1) + O(y^(-3))");
    CHECK(to_string(S()) == "0");
}
