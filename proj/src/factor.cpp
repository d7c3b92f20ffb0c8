#include "quadsolv/factor.hpp"

#include <algorithm>

#include "quadsolv/int_factor.hpp"

namespace quadsolv {

namespace {

constexpr size_t kKroneckerComboCap = 100000;

// All rational roots of a primitive integer polynomial, each removed from g.
std::vector<Rat> extract_rational_roots(Polynomial<Rat>& g) {
    std::vector<Rat> roots;
    while (g.degree() >= 1 && is_zero(g.coeff(0))) {
        roots.push_back(Rat(0));
        g = primitive_part(g / Polynomial<Rat>::variable());
    }
    if (g.degree() < 1) return roots;

    auto nums = divisors(rat_num(g.coeff(0)));
    auto dens = divisors(rat_num(g.leading()));
    for (const Int& q : dens) {
        for (const Int& p : nums) {
            if (boost::multiprecision::gcd(p, q) != 1) continue;
            for (int sign : {1, -1}) {
                Rat cand(sign * p, q);
                while (g.degree() >= 1 && is_zero(g.evaluate(cand))) {
                    roots.push_back(cand);
                    g = primitive_part(g / Polynomial<Rat>::from_coeffs({-cand, Rat(1)}));
                }
            }
        }
    }
    return roots;
}

std::vector<Rat> kronecker_points(int count) {
    std::vector<Rat> pts;
    pts.push_back(Rat(0));
    for (int k = 1; static_cast<int>(pts.size()) < count; ++k) {
        pts.push_back(Rat(k));
        if (static_cast<int>(pts.size()) < count) pts.push_back(Rat(-k));
    }
    return pts;
}

bool all_integer(const Polynomial<Rat>& p) {
    for (const Rat& c : p.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

// One Kronecker pass: look for a degree-d integer factor of the primitive
// integer polynomial g.  On success divides it out of g and returns it.
bool kronecker_try(Polynomial<Rat>& g, int d, Polynomial<Rat>& found) {
    auto pts = kronecker_points(d + 1);
    std::vector<std::vector<Rat>> choices;
    size_t combos = 1;
    for (int i = 0; i <= d; ++i) {
        Int v = rat_num(g.evaluate(pts[static_cast<size_t>(i)]));
        auto divs = divisors(v);
        std::vector<Rat> opts;
        for (const Int& dv : divs) {
            opts.push_back(Rat(dv));
            if (i > 0) opts.push_back(Rat(-dv));
        }
        combos *= opts.size();
        if (combos > kKroneckerComboCap)
            throw capability_error("Kronecker factor search space too large");
        choices.push_back(std::move(opts));
    }

    // Lagrange basis for the fixed node set.
    std::vector<Polynomial<Rat>> basis;
    for (int i = 0; i <= d; ++i) {
        Polynomial<Rat> b{Rat(1)};
        Rat denom(1);
        for (int j = 0; j <= d; ++j) {
            if (i == j) continue;
            b *= Polynomial<Rat>::from_coeffs({-pts[static_cast<size_t>(j)], Rat(1)});
            denom *= pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)];
        }
        basis.push_back((1 / denom) * b);
    }

    std::vector<size_t> idx(static_cast<size_t>(d) + 1, 0);
    while (true) {
        Polynomial<Rat> h;
        for (int i = 0; i <= d; ++i)
            h += choices[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]] * basis[static_cast<size_t>(i)];
        if (h.degree() == d && all_integer(h)) {
            auto [q, r] = divmod(g, h);
            if (is_zero(r)) {
                g = primitive_part(q);
                found = primitive_part(h);
                return true;
            }
        }
        int pos = 0;
        while (pos <= d) {
            if (++idx[static_cast<size_t>(pos)] < choices[static_cast<size_t>(pos)].size()) break;
            idx[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos > d) return false;
    }
}

// Irreducible factorization of a squarefree monic polynomial.
std::vector<Polynomial<Rat>> factor_squarefree(const Polynomial<Rat>& f) {
    std::vector<Polynomial<Rat>> out;
    Polynomial<Rat> g = primitive_part(f);
    for (const Rat& r : extract_rational_roots(g))
        out.push_back(Polynomial<Rat>::from_coeffs({-r, Rat(1)}));
    int d = 2;
    while (2 * d <= g.degree()) {
        Polynomial<Rat> found;
        if (kronecker_try(g, d, found)) {
            out.push_back(monic(found));
        } else {
            ++d;
        }
    }
    if (g.degree() >= 1) out.push_back(monic(g));
    std::sort(out.begin(), out.end(), [](const Polynomial<Rat>& a, const Polynomial<Rat>& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return out;
}

} // namespace

Factorization factor_over_q(const Polynomial<Rat>& p, int degree_bound) {
    if (is_zero(p)) throw usage_error("cannot factor the zero polynomial");
    if (p.degree() > degree_bound)
        throw capability_error("factorization degree " + std::to_string(p.degree()) +
                               " exceeds bound " + std::to_string(degree_bound));
    Factorization result;
    result.unit = p.leading();
    if (p.degree() == 0) return result;
    for (const auto& [sf, mult] : squarefree_decomposition(monic(p)))
        for (const auto& irr : factor_squarefree(sf)) result.factors.emplace_back(irr, mult);
    std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        if (a.first.coeffs() != b.first.coeffs()) return a.first.coeffs() < b.first.coeffs();
        return a.second < b.second;
    });
    return result;
}

bool is_irreducible_over_q(const Polynomial<Rat>& p, int degree_bound) {
    if (p.degree() < 1) return false;
    auto f = factor_over_q(p, degree_bound);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

} // namespace quadsolv
