#pragma once

#include <random>
#include <vector>

#include "quadsolv/number_field.hpp"
#include "quadsolv/polynomial.hpp"
#include "quadsolv/rational_function.hpp"

namespace qs_test {

using namespace quadsolv;

// Deterministic generator for property-style tests.
struct Rng {
    std::mt19937 g;
    explicit Rng(unsigned seed) : g(seed) {}

    int range(int lo, int hi) {  // inclusive
        std::uniform_int_distribution<int> d(lo, hi);
        return d(g);
    }

    Rat rat(int max_num = 6, int max_den = 4) {
        return Rat(range(-max_num, max_num), range(1, max_den));
    }

    Rat rat_nonzero(int max_num = 6, int max_den = 4) {
        while (true) {
            Rat r = rat(max_num, max_den);
            if (!is_zero(r)) return r;
        }
    }

    Polynomial<Rat> poly(int max_deg, int max_num = 6) {
        std::vector<Rat> c;
        int d = range(0, max_deg);
        for (int i = 0; i <= d; ++i) c.push_back(rat(max_num));
        return Polynomial<Rat>::from_coeffs(std::move(c));
    }

    Polynomial<Rat> poly_nonzero(int max_deg, int max_num = 6) {
        while (true) {
            auto p = poly(max_deg, max_num);
            if (!is_zero(p)) return p;
        }
    }

    RatFunc ratfunc(int max_deg = 2) {
        return RatFunc(poly(max_deg), poly_nonzero(max_deg));
    }

    RatFunc ratfunc_nonzero(int max_deg = 2) {
        while (true) {
            RatFunc f = ratfunc(max_deg);
            if (!is_zero(f)) return f;
        }
    }

    NumberFieldElem elem(const NumberFieldPtr& f, int max_num = 5) {
        std::vector<Rat> c;
        for (int i = 0; i < f->degree(); ++i) c.push_back(rat(max_num));
        return NumberFieldElem(f, Polynomial<Rat>::from_coeffs(std::move(c)));
    }

    NumberFieldElem elem_nonzero(const NumberFieldPtr& f, int max_num = 5) {
        while (true) {
            auto e = elem(f, max_num);
            if (!is_zero(e)) return e;
        }
    }
};

} // namespace qs_test
