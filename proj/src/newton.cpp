#include "quadsolv/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace quadsolv {

namespace {

using SPoly = Polynomial<NumberFieldElem>;  // polynomial in the local parameter
using WorkPoly = Polynomial<SPoly>;         // main variable w, coefficients in L[t]

long ord(const SPoly& p) {
    for (int i = 0; i <= p.degree(); ++i)
        if (!is_zero(p.coeff(i))) return i;
    throw usage_error("order of the zero polynomial");
}

WorkPoly map_work(const WorkPoly& g, const NumberFieldElem& gen_image) {
    std::vector<SPoly> c;
    for (int j = 0; j <= g.degree(); ++j) c.push_back(map_poly(g.coeff(j), gen_image));
    return WorkPoly::from_coeffs(std::move(c));
}

// Ascending partial expansion of one root class in the local parameter.
struct RawBranch {
    int ram = 1;
    std::map<long, NumberFieldElem> terms;  // exponent j/ram
    bool exact = false;
    long known_to = 0;  // exponents <= known_to/ram are certain (when not exact)
    NumberFieldPtr field;
    NumberFieldElem gen_image;  // image of the caller's field generator in field
    long mult = 1;
};

Rat binom(int n, int k) {
    Rat r(1);
    for (int i = 1; i <= k; ++i) r = r * Rat(n - k + i) / Rat(i);
    return r;
}

// G(t^e, t^q (c + w)) / t^nu
WorkPoly substitute_edge(const WorkPoly& g, int e, long q, const NumberFieldElem& c) {
    std::map<int, std::map<long, NumberFieldElem>> acc;
    const int m = g.degree();
    for (int j = 0; j <= m; ++j) {
        const SPoly a = g.coeff(j);
        if (is_zero(a)) continue;
        for (int i = 0; i <= j; ++i) {
            NumberFieldElem b = NumberFieldElem(binom(j, i)) * ring_pow(c, static_cast<long>(j - i));
            if (is_zero(b)) continue;
            for (int k = 0; k <= a.degree(); ++k) {
                const NumberFieldElem ak = a.coeff(k);
                if (is_zero(ak)) continue;
                const long texp = static_cast<long>(e) * k + q * j;
                auto it = acc[i].find(texp);
                if (it == acc[i].end())
                    acc[i][texp] = ak * b;
                else
                    it->second = it->second + ak * b;
            }
        }
    }
    bool first = true;
    long nu = 0;
    for (auto& [i, row] : acc) {
        (void)i;
        for (auto it = row.begin(); it != row.end();) {
            if (is_zero(it->second)) {
                it = row.erase(it);
                continue;
            }
            if (first || it->first < nu) {
                nu = it->first;
                first = false;
            }
            ++it;
        }
    }
    std::vector<SPoly> coeffs;
    int top = -1;
    for (const auto& [i, row] : acc)
        if (!row.empty()) top = std::max(top, i);
    for (int i = 0; i <= top; ++i) {
        std::vector<NumberFieldElem> row;
        auto it = acc.find(i);
        if (it != acc.end() && !it->second.empty()) {
            long max_e = it->second.rbegin()->first - nu;
            row.assign(static_cast<size_t>(max_e + 1), NumberFieldElem(Rat(0)));
            for (const auto& [texp, v] : it->second) row[static_cast<size_t>(texp - nu)] = v;
        }
        coeffs.push_back(SPoly::from_coeffs(std::move(row)));
    }
    return WorkPoly::from_coeffs(std::move(coeffs));
}

struct HullPoint {
    int j;
    long v;
};

// Lower convex hull, left to right; collinear middle points are dropped so
// each edge spans its full aligned run.
std::vector<HullPoint> lower_hull(std::vector<HullPoint> pts) {
    std::vector<HullPoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            long cross = static_cast<long>(b.j - a.j) * (p.v - a.v) -
                         (b.v - a.v) * static_cast<long>(p.j - a.j);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

void expand_roots(const WorkPoly& g_in, const NumberFieldPtr& field, bool positive_only,
                  int budget, int degree_bound, std::vector<RawBranch>& out) {
    WorkPoly g = g_in;
    if (is_zero(g)) throw error("empty working polynomial in the polygon iteration");

    int j0 = 0;
    while (j0 <= g.degree() && is_zero(g.coeff(j0))) ++j0;
    if (j0 > 0) {
        // w = 0 is a root: an exactly terminating expansion
        if (j0 > 1) throw error("repeated zero root; the curve was not squarefree");
        RawBranch zero;
        zero.exact = true;
        zero.field = field;
        zero.gen_image = NumberFieldElem::generator(field);
        out.push_back(std::move(zero));
        std::vector<SPoly> rest;
        for (int j = j0; j <= g.degree(); ++j) rest.push_back(g.coeff(j));
        g = WorkPoly::from_coeffs(std::move(rest));
        if (g.degree() < 1) return;
    }

    std::vector<HullPoint> pts;
    for (int j = 0; j <= g.degree(); ++j) {
        const SPoly a = g.coeff(j);
        if (!is_zero(a)) pts.push_back({j, ord(a)});
    }
    auto hull = lower_hull(std::move(pts));

    for (size_t eidx = 0; eidx + 1 < hull.size(); ++eidx) {
        const auto& p1 = hull[eidx];
        const auto& p2 = hull[eidx + 1];
        const long dv = p2.v - p1.v;
        const int dj = p2.j - p1.j;
        // root valuation mu = -dv/dj = q/e in lowest terms
        if (positive_only && dv >= 0) continue;
        const long gq = std::gcd(std::abs(dv), static_cast<long>(dj));
        const int e = static_cast<int>(dj / gq);
        const long q = -dv / gq;

        // characteristic polynomial in gamma = c^e along the edge
        std::vector<NumberFieldElem> psi;
        for (int j = p1.j, k = 0; j <= p2.j; j += e, ++k) {
            const long line_v = p1.v - static_cast<long>(k) * q;
            const SPoly a = g.coeff(j);
            psi.push_back((!is_zero(a) && a.degree() >= line_v && line_v >= 0)
                              ? a.coeff(static_cast<int>(line_v))
                              : NumberFieldElem(Rat(0)));
        }
        SPoly psi_poly = SPoly::from_coeffs(std::move(psi));

        for (const auto& [h, hmult] : factor_over_field(psi_poly).factors) {
            auto ext1 = adjoin_root(field, h, degree_bound);
            WorkPoly g1 = ext1.grew ? map_work(g, ext1.base_generator_image) : g;
            const NumberFieldElem gamma = ext1.root;

            NumberFieldElem c = gamma;
            NumberFieldPtr l2 = ext1.field;
            WorkPoly g2 = g1;
            NumberFieldElem gen_in_l2 = ext1.base_generator_image;
            if (e > 1) {
                std::vector<NumberFieldElem> root_poly(static_cast<size_t>(e) + 1,
                                                       NumberFieldElem(Rat(0)));
                root_poly[0] = -gamma;
                root_poly[static_cast<size_t>(e)] = NumberFieldElem(Rat(1));
                auto ext2 = adjoin_root(ext1.field,
                                        Polynomial<NumberFieldElem>::from_coeffs(root_poly),
                                        degree_bound);
                c = ext2.root;
                l2 = ext2.field;
                if (ext2.grew) {
                    g2 = map_work(g1, ext2.base_generator_image);
                    gen_in_l2 = apply_generator_image(gen_in_l2, ext2.base_generator_image);
                }
            }

            if (budget <= 1) {
                // not-yet-separated germs stay together in one representative
                RawBranch b;
                b.ram = e;
                b.terms[q] = c;
                b.known_to = q;
                b.field = l2;
                b.gen_image = gen_in_l2;
                b.mult = static_cast<long>(h.degree()) * hmult;
                out.push_back(std::move(b));
                continue;
            }

            WorkPoly next = substitute_edge(g2, e, q, c);
            std::vector<RawBranch> tails;
            expand_roots(next, l2, true, budget - 1, degree_bound, tails);
            for (auto& tail : tails) {
                RawBranch b;
                b.ram = e * tail.ram;
                NumberFieldElem c_in_tail =
                    same_field(tail.field, l2) ? c : apply_generator_image(c, tail.gen_image);
                b.terms[q * tail.ram] = c_in_tail;
                for (const auto& [k, v] : tail.terms) {
                    auto slot = b.terms.find(q * tail.ram + k);
                    if (slot == b.terms.end())
                        b.terms[q * tail.ram + k] = v;
                    else
                        slot->second = slot->second + v;
                }
                b.exact = tail.exact;
                if (!tail.exact) b.known_to = q * tail.ram + tail.known_to;
                b.field = tail.field;
                b.gen_image = same_field(tail.field, l2)
                                  ? gen_in_l2
                                  : apply_generator_image(gen_in_l2, tail.gen_image);
                b.mult = h.degree() * tail.mult;
                out.push_back(std::move(b));
            }
        }
    }
}

} // namespace

AlgebraicCurve make_algebraic_curve(CurvePoly p) {
    if (is_zero(p) || p.degree() < 1)
        throw validation_error("curve must have degree >= 1 in z");
    return AlgebraicCurve{std::move(p)};
}

ExpansionResult expand_at_infinity(const AlgebraicCurve& c, int terms, int degree_bound) {
    if (terms < 1) throw usage_error("terms must be >= 1");

    // squarefree part in z over Q(y)
    auto to_rf = [](const CurvePoly& p) {
        std::vector<RatFunc> v;
        for (int j = 0; j <= p.degree(); ++j) v.emplace_back(p.coeff(j));
        return Polynomial<RatFunc>::from_coeffs(std::move(v));
    };
    Polynomial<RatFunc> prf = to_rf(c.p);
    auto g = poly_gcd(prf, prf.derivative());
    ExpansionResult result;
    if (g.degree() > 0) {
        prf = exact_div(prf, g);
        result.squarefree_reduced = true;
    }
    // clear denominators back to Q[y][z]
    Polynomial<Rat> common{Rat(1)};
    for (int j = 0; j <= prf.degree(); ++j) {
        auto d = prf.coeff(j).den();
        common = common * exact_div(d, poly_gcd(common, d));
    }
    std::vector<Polynomial<Rat>> cleared;
    for (int j = 0; j <= prf.degree(); ++j) {
        auto term = prf.coeff(j);
        cleared.push_back(term.num() * exact_div(common, term.den()));
    }
    CurvePoly sf = CurvePoly::from_coeffs(std::move(cleared));
    result.degree = sf.degree();

    // substitute y = 1/s and clear: A_j(y) -> s^(M - deg A_j) * rev(A_j)
    int max_deg = 0;
    for (int j = 0; j <= sf.degree(); ++j)
        if (!is_zero(sf.coeff(j))) max_deg = std::max(max_deg, sf.coeff(j).degree());
    auto q_field = NumberField::rationals();
    std::vector<SPoly> scoeffs;
    for (int j = 0; j <= sf.degree(); ++j) {
        const Polynomial<Rat> a = sf.coeff(j);
        if (is_zero(a)) {
            scoeffs.emplace_back();
            continue;
        }
        Polynomial<Rat> shifted_rev =
            Polynomial<Rat>::monomial(max_deg - a.degree(), Rat(1)) * a.reversed();
        scoeffs.push_back(lift_poly(shifted_rev, q_field));
    }
    WorkPoly f = WorkPoly::from_coeffs(std::move(scoeffs));

    std::vector<RawBranch> raw;
    expand_roots(f, q_field, false, terms, degree_bound, raw);

    for (auto& rb : raw) {
        PuiseuxSeries<NumberFieldElem> s;
        for (const auto& [j, v] : rb.terms)
            s += PuiseuxSeries<NumberFieldElem>::monomial(v, -j, rb.ram);
        if (!rb.exact) s = s.with_floor(-rb.known_to - 1, rb.ram);
        s = s.normalized();
        Branch b;
        b.series = s;
        b.ramification = rb.ram;
        b.field = rb.field ? rb.field : q_field;
        b.multiplicity = rb.mult;
        b.exact = rb.exact;
        result.branches.push_back(std::move(b));
    }

    std::sort(result.branches.begin(), result.branches.end(), [](const Branch& a, const Branch& b) {
        auto la = a.series.leading(), lb = b.series.leading();
        Rat ea = la ? Rat(la->j, la->ram) : Rat(0);
        Rat eb = lb ? Rat(lb->j, lb->ram) : Rat(0);
        if (ea != eb) return ea > eb;
        if (a.ramification != b.ramification) return a.ramification < b.ramification;
        if (a.field->degree() != b.field->degree()) return a.field->degree() < b.field->degree();
        if (la && lb && !(la->coeff == lb->coeff)) return canonical_less(la->coeff, lb->coeff);
        return false;
    });
    return result;
}

// The truncated series is substituted as an exact object.  A correct
// truncation with error below the floor leaves a residual of valuation at
// most v(dP/dz at the series) + floor; anything larger signals a bad
// coefficient.
CertifyResult certify_branch(const AlgebraicCurve& c, const Branch& b) {
    using S = PuiseuxSeries<NumberFieldElem>;
    S trunc = b.series.as_exact();
    auto horner = [&trunc](const CurvePoly& p) {
        S acc;
        for (int j = p.degree(); j >= 0; --j) {
            acc = acc * trunc;
            acc += S::from_polynomial(p.coeff(j));
        }
        return acc;
    };
    S residual = horner(c.p);
    CertifyResult r;
    if (!residual.has_terms()) {
        r.passed = true;
        r.exact_zero = true;
        return r;
    }
    Rat v(residual.leading()->j, residual.leading()->ram);
    r.residual_valuation = v;
    if (!b.series.floor()) {
        r.passed = false;  // an exact branch must evaluate to exactly zero
        return r;
    }
    S dpz = horner(c.p.derivative());
    if (!dpz.has_terms()) {
        r.passed = false;
        return r;
    }
    Rat w(dpz.leading()->j, dpz.leading()->ram);
    r.passed = v <= w + Rat(*b.series.floor(), b.series.ram());
    return r;
}

std::string to_string(const Branch& b, const std::string& var) {
    std::ostringstream os;
    os << "z = " << to_string(b.series, var);
    os << "  [ramification " << b.ramification << ", multiplicity " << b.multiplicity << ", field "
       << field_to_string(b.field) << (b.exact ? ", exact" : "") << "]";
    return os.str();
}

} // namespace quadsolv
