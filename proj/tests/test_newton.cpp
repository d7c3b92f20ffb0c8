#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadsolv/newton.hpp"
#include "quadsolv/printing.hpp"

#include "support/test_support.hpp"

using namespace quadsolv;

namespace {

using PQ = Polynomial<Rat>;
using S = PuiseuxSeries<NumberFieldElem>;

PQ py(std::vector<Rat> asc) { return PQ::from_coeffs(std::move(asc)); }

// curve builder: list of z-coefficients (ascending in z), each a y-polynomial
AlgebraicCurve curve(std::vector<PQ> zcoeffs) {
    return make_algebraic_curve(CurvePoly::from_coeffs(std::move(zcoeffs)));
}

long germ_count(const ExpansionResult& r) {
    long total = 0;
    for (const auto& b : r.branches) total += static_cast<long>(b.ramification) * b.multiplicity;
    return total;
}

} // namespace

TEST_CASE("defining square root: z^2 - y") {
    auto c = curve({py({Rat(0), Rat(-1)}), py({}), py({Rat(1)})});
    auto r = expand_at_infinity(c, 4);
    REQUIRE(r.branches.size() == 1);
    const Branch& b = r.branches[0];
    CHECK(b.ramification == 2);
    CHECK(b.multiplicity == 1);
    CHECK(b.exact);
    CHECK(b.field->is_rational());
    CHECK(b.series == S::monomial(NumberFieldElem(Rat(1)), 1, 2));
    CHECK(germ_count(r) == 2);

    auto cert = certify_branch(c, b);
    CHECK(cert.passed);
    CHECK(cert.exact_zero);
}

TEST_CASE("cusp: z^3 - y^2") {
    auto c = curve({py({Rat(0), Rat(0), Rat(-1)}), py({}), py({}), py({Rat(1)})});
    auto r = expand_at_infinity(c, 4);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].ramification == 3);
    CHECK(r.branches[0].multiplicity == 1);
    CHECK(r.branches[0].series == S::monomial(NumberFieldElem(Rat(1)), 2, 3));
    CHECK(germ_count(r) == 3);
}

TEST_CASE("hyperbola: z^2 - y^2 - 1") {
    auto c = curve({py({Rat(-1), Rat(0), Rat(-1)}), py({}), py({Rat(1)})});
    auto r = expand_at_infinity(c, 3);
    REQUIRE(r.branches.size() == 2);
    CHECK(germ_count(r) == 2);
    for (const auto& b : r.branches) {
        CHECK(b.ramification == 1);
        CHECK(b.multiplicity == 1);
        CHECK_FALSE(b.exact);
        auto cert = certify_branch(c, b);
        CHECK(cert.passed);
        REQUIRE(cert.residual_valuation.has_value());
        CHECK(*cert.residual_valuation <= Rat(-4));
        CHECK(*cert.residual_valuation <= Rat(*b.series.floor(), b.series.ram()));
    }
    // z = y + (1/2) y^-1 - (1/8) y^-3 + O(y^-4): the binomial series of
    // y*sqrt(1 + y^-2)
    const Branch& plus = r.branches.back().series.leading()->coeff == NumberFieldElem(Rat(1))
                             ? r.branches.back()
                             : r.branches.front();
    S expected = S::monomial(NumberFieldElem(Rat(1)), 1, 1) +
                 S::monomial(NumberFieldElem(Rat(1, 2)), -1, 1) +
                 S::monomial(NumberFieldElem(Rat(-1, 8)), -3, 1);
    expected = expected.with_floor(*plus.series.floor(), 1);
    CHECK(plus.series == expected);
}

TEST_CASE("double point at infinity: z^2 - 2yz + y^2 - y") {
    auto c = curve({py({Rat(0), Rat(-1), Rat(1)}), py({Rat(0), Rat(-2)}), py({Rat(1)})});
    auto r = expand_at_infinity(c, 3);
    REQUIRE(r.branches.size() == 1);
    const Branch& b = r.branches[0];
    CHECK(b.ramification == 2);
    CHECK(b.multiplicity == 1);
    CHECK(b.exact);
    // z = y + y^(1/2)
    S expected = S::monomial(NumberFieldElem(Rat(1)), 2, 2) +
                 S::monomial(NumberFieldElem(Rat(1)), 1, 2);
    CHECK(b.series == expected);
    CHECK(germ_count(r) == 2);
    CHECK(certify_branch(c, b).exact_zero);
}

TEST_CASE("coefficient field growth: z^2 - 2y") {
    auto c = curve({py({Rat(0), Rat(-2)}), py({}), py({Rat(1)})});
    auto r = expand_at_infinity(c, 3);
    REQUIRE(r.branches.size() == 1);
    const Branch& b = r.branches[0];
    CHECK(b.ramification == 2);
    CHECK(b.multiplicity == 1);
    CHECK(b.field->minpoly() == py({Rat(-2), Rat(0), Rat(1)}));
    auto lead = b.series.leading();
    REQUIRE(lead.has_value());
    CHECK(lead->coeff == NumberFieldElem::generator(b.field));
    CHECK(germ_count(r) == 2);
    CHECK(certify_branch(c, b).passed);
}

TEST_CASE("conjugate cycles: z^4 - 2y^2") {
    auto c = curve({py({Rat(0), Rat(0), Rat(-2)}), py({}), py({}), py({}), py({Rat(1)})});
    auto r = expand_at_infinity(c, 3);
    REQUIRE(r.branches.size() == 1);
    const Branch& b = r.branches[0];
    CHECK(b.ramification == 2);
    CHECK(b.multiplicity == 2);
    CHECK(b.field->degree() == 4);
    CHECK(germ_count(r) == 4);
    CHECK(certify_branch(c, b).passed);
    // the leading coefficient is a 4th root of 2
    auto lead = b.series.leading();
    REQUIRE(lead.has_value());
    CHECK(ring_pow(lead->coeff, 4) == NumberFieldElem(Rat(2)));
}

TEST_CASE("zero branch and rational lines: z^3 - y^2 z") {
    auto c = curve({py({}), py({Rat(0), Rat(0), Rat(-1)}), py({}), py({Rat(1)})});
    auto r = expand_at_infinity(c, 3);
    REQUIRE(r.branches.size() == 3);
    CHECK(germ_count(r) == 3);
    int exact_count = 0;
    for (const auto& b : r.branches) {
        if (b.exact) ++exact_count;
        CHECK(certify_branch(c, b).passed);
    }
    CHECK(exact_count == 3);  // 0, y, -y are all exact
}

TEST_CASE("mixed polygon: z^3 - yz - y") {
    auto c = curve({py({Rat(0), Rat(-1)}), py({Rat(0), Rat(-1)}), py({}), py({Rat(1)})});
    auto r = expand_at_infinity(c, 4);
    REQUIRE(r.branches.size() == 2);
    CHECK(germ_count(r) == 3);
    // one unramified branch tending to -1, one square-root pair
    bool saw_finite = false, saw_ram2 = false;
    for (const auto& b : r.branches) {
        CHECK(certify_branch(c, b).passed);
        if (b.ramification == 1) {
            saw_finite = true;
            CHECK(b.series.leading()->j == 0);
            CHECK(b.series.leading()->coeff == NumberFieldElem(Rat(-1)));
        }
        if (b.ramification == 2) saw_ram2 = true;
    }
    CHECK(saw_finite);
    CHECK(saw_ram2);
}

TEST_CASE("square-free preprocessing note") {
    // (z - y)^2
    auto c = curve({py({Rat(0), Rat(0), Rat(1)}), py({Rat(0), Rat(-2)}), py({Rat(1)})});
    auto r = expand_at_infinity(c, 3);
    CHECK(r.squarefree_reduced);
    CHECK(r.degree == 1);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].exact);
    CHECK(germ_count(r) == 1);
}

TEST_CASE("corrupted branch fails certification") {
    auto c = curve({py({Rat(-1), Rat(0), Rat(-1)}), py({}), py({Rat(1)})});
    auto r = expand_at_infinity(c, 3);
    Branch bad = r.branches[0];
    // flip one coefficient
    S tampered = bad.series + S::monomial(NumberFieldElem(Rat(1)), -1, 1);
    bad.series = tampered.with_floor(*bad.series.floor(), 1);
    auto cert = certify_branch(c, bad);
    CHECK_FALSE(cert.passed);
    REQUIRE(cert.residual_valuation.has_value());
    CHECK(*cert.residual_valuation > Rat(-4));
}

TEST_CASE("extension degree bound produces a capability error") {
    // z^4 - 2y^2 needs a degree-4 coefficient field
    auto c = curve({py({Rat(0), Rat(0), Rat(-2)}), py({}), py({}), py({}), py({Rat(1)})});
    CHECK_THROWS_AS(expand_at_infinity(c, 3, 2), capability_error);
}

TEST_CASE("degree accounting on a random reducible curve") {
    // (z^2 - y)(z - y + 1): branches of both factors, degree 3
    auto z2y = CurvePoly::from_coeffs({py({Rat(0), Rat(-1)}), py({}), py({Rat(1)})});
    auto lin = CurvePoly::from_coeffs({py({Rat(1), Rat(-1)}), py({Rat(1)})});
    auto c = make_algebraic_curve(z2y * lin);
    auto r = expand_at_infinity(c, 3);
    CHECK(germ_count(r) == 3);
    for (const auto& b : r.branches) CHECK(certify_branch(c, b).passed);
}
