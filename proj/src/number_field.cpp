#include "quadsolv/number_field.hpp"

#include <algorithm>
#include <sstream>

namespace quadsolv {

namespace {
using PolyQ = Polynomial<Rat>;
using PolyY = Polynomial<PolyQ>;  // main variable y, coefficients in Q[x]
using PolyF = Polynomial<NumberFieldElem>;
} // namespace

NumberFieldPtr NumberField::rationals() {
    static const NumberFieldPtr q = make_unchecked(PolyQ::variable());
    return q;
}

NumberFieldPtr NumberField::make_unchecked(PolyQ monic_irreducible) {
    return NumberFieldPtr(new NumberField(std::move(monic_irreducible)));
}

NumberFieldPtr NumberField::make_checked(const PolyQ& minpoly, int degree_bound) {
    if (minpoly.degree() < 1) throw validation_error("number field minimal polynomial must have degree >= 1");
    PolyQ m = monic(minpoly);
    if (m.degree() > 1 && !is_irreducible_over_q(m, degree_bound))
        throw validation_error("number field minimal polynomial is reducible over Q");
    return make_unchecked(std::move(m));
}

Rat NumberField::generator_value() const {
    if (!is_rational()) throw usage_error("generator_value only exists for degree-1 fields");
    return -minpoly_.coeff(0);
}

bool same_field(const NumberFieldPtr& a, const NumberFieldPtr& b) {
    return a == b || a->minpoly() == b->minpoly();
}

NumberFieldElem::NumberFieldElem(Rat v)
    : field_(NumberField::rationals()), residue_(PolyQ(std::move(v))) {}

NumberFieldElem::NumberFieldElem(NumberFieldPtr field, PolyQ residue)
    : field_(std::move(field)), residue_(std::move(residue)) {
    if (residue_.degree() >= field_->degree()) residue_ = residue_ % field_->minpoly();
}

NumberFieldElem NumberFieldElem::generator(const NumberFieldPtr& field) {
    return NumberFieldElem(field, PolyQ::variable());
}

bool NumberFieldElem::is_rational_value() const {
    return residue_.degree() < 1 || field_->is_rational();
}

Rat NumberFieldElem::rational_value() const {
    if (field_->is_rational() && residue_.degree() >= 1)
        return residue_.evaluate(field_->generator_value());
    if (residue_.degree() < 1) return residue_.coeff(0);
    throw usage_error("number field element is not rational");
}

void NumberFieldElem::unify(NumberFieldElem& a, NumberFieldElem& b) {
    if (a.field_ == b.field_) return;
    if (a.field_->minpoly() == b.field_->minpoly()) {
        b.field_ = a.field_;
        return;
    }
    if (a.field_->is_rational()) {
        a = NumberFieldElem(b.field_, PolyQ(a.rational_value()));
        return;
    }
    if (b.field_->is_rational()) {
        b = NumberFieldElem(a.field_, PolyQ(b.rational_value()));
        return;
    }
    throw usage_error("cannot mix elements of distinct number fields");
}

NumberFieldElem operator+(NumberFieldElem a, NumberFieldElem b) {
    NumberFieldElem::unify(a, b);
    return {a.field_, a.residue_ + b.residue_};
}

NumberFieldElem operator-(NumberFieldElem a, NumberFieldElem b) {
    NumberFieldElem::unify(a, b);
    return {a.field_, a.residue_ - b.residue_};
}

NumberFieldElem operator*(NumberFieldElem a, NumberFieldElem b) {
    NumberFieldElem::unify(a, b);
    return {a.field_, (a.residue_ * b.residue_) % a.field_->minpoly()};
}

NumberFieldElem NumberFieldElem::inverse() const {
    if (is_zero_elem()) throw usage_error("inverse of zero in a number field");
    auto [g, s, t] = poly_ext_gcd(residue_, field_->minpoly());
    (void)t;
    if (g.degree() != 0)
        throw usage_error("non-invertible residue; minimal polynomial not irreducible?");
    return {field_, ((Rat(1) / g.coeff(0)) * s) % field_->minpoly()};
}

NumberFieldElem operator/(NumberFieldElem a, NumberFieldElem b) {
    NumberFieldElem::unify(a, b);
    return a * b.inverse();
}

bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) {
    NumberFieldElem x = a, y = b;
    NumberFieldElem::unify(x, y);
    return x.residue() == y.residue();
}

NumberFieldElem apply_generator_image(const NumberFieldElem& e, const NumberFieldElem& gen_image) {
    return evaluate_into(e.residue(), gen_image, [](const Rat& c) { return NumberFieldElem(c); });
}

Rat field_trace(const NumberFieldElem& e) {
    const PolyQ& m = e.field()->minpoly();
    const int d = m.degree();
    // Newton's identities give the power sums of the conjugate roots.
    std::vector<Rat> p(static_cast<size_t>(d), Rat(0));
    p[0] = Rat(d);
    for (int k = 1; k < d; ++k) {
        Rat acc = Rat(-k) * m.coeff(d - k);
        for (int i = 1; i < k; ++i) acc -= m.coeff(d - i) * p[static_cast<size_t>(k - i)];
        p[static_cast<size_t>(k)] = acc;
    }
    Rat tr(0);
    for (int k = 0; k <= e.residue().degree(); ++k) tr += e.residue().coeff(k) * p[static_cast<size_t>(k)];
    return tr;
}

Polynomial<NumberFieldElem> lift_poly(const PolyQ& p, const NumberFieldPtr& field) {
    std::vector<NumberFieldElem> c;
    c.reserve(static_cast<size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i) c.emplace_back(field, PolyQ(p.coeff(i)));
    return PolyF::from_coeffs(std::move(c));
}

Polynomial<NumberFieldElem> map_poly(const PolyF& p, const NumberFieldElem& gen_image) {
    std::vector<NumberFieldElem> c;
    c.reserve(static_cast<size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i) c.push_back(apply_generator_image(p.coeff(i), gen_image));
    return PolyF::from_coeffs(std::move(c));
}

namespace {

NumberFieldPtr coefficient_field(const PolyF& f) {
    for (int i = 0; i <= f.degree(); ++i)
        if (!f.coeff(i).field()->is_rational()) return f.coeff(i).field();
    return NumberField::rationals();
}

// Rebinds every coefficient into one field (promoting rationals).
PolyF normalize_field(const PolyF& f, const NumberFieldPtr& field) {
    std::vector<NumberFieldElem> c;
    for (int i = 0; i <= f.degree(); ++i) {
        NumberFieldElem x = f.coeff(i);
        if (!same_field(x.field(), field)) {
            if (!x.is_rational_value()) throw usage_error("polynomial mixes distinct number fields");
            x = NumberFieldElem(field, PolyQ(x.rational_value()));
        } else if (x.field() != field) {
            x = NumberFieldElem(field, x.residue());
        }
        c.push_back(std::move(x));
    }
    return PolyF::from_coeffs(std::move(c));
}

bool try_rational_poly(const PolyF& f, PolyQ& out) {
    std::vector<Rat> c;
    for (int i = 0; i <= f.degree(); ++i) {
        if (!f.coeff(i).is_rational_value()) return false;
        c.push_back(f.coeff(i).rational_value());
    }
    out = PolyQ::from_coeffs(std::move(c));
    return true;
}

// g with generator a replaced by y and x shifted to x - s*y, assembled in
// Q[x][y] with y as the main variable.
PolyY shifted_bivariate(const PolyF& g, const Rat& s) {
    PolyY acc;
    PolyY x_minus_sy = PolyY::from_coeffs({PolyQ::variable(), PolyQ(-s)});
    for (int i = g.degree(); i >= 0; --i) {
        // residue in a -> polynomial in y with rational coefficients
        const PolyQ r = g.coeff(i).residue();
        std::vector<PolyQ> yc;
        for (int k = 0; k <= r.degree(); ++k) yc.emplace_back(r.coeff(k));
        acc = acc * x_minus_sy + PolyY::from_coeffs(std::move(yc));
    }
    return acc;
}

PolyY lift_bivariate(const PolyQ& m) {
    std::vector<PolyQ> c;
    for (int i = 0; i <= m.degree(); ++i) c.emplace_back(m.coeff(i));
    return PolyY::from_coeffs(std::move(c));
}

std::vector<std::pair<PolyF, int>> lift_rational_factors(const PolyQ& p, const NumberFieldPtr& field,
                                                         int degree_cap) {
    std::vector<std::pair<PolyF, int>> out;
    for (const auto& [fac, mult] : factor_over_q(p, degree_cap).factors)
        out.emplace_back(lift_poly(fac, field), mult);
    return out;
}

// Irreducible factors of a squarefree monic g over its field.
std::vector<PolyF> trager_squarefree(const PolyF& g, const NumberFieldPtr& field, int norm_degree_cap) {
    if (g.degree() <= 1) return {g};
    const PolyQ& M = field->minpoly();
    PolyY m_lift = lift_bivariate(M);
    for (int k = 0;; ++k) {
        if (k > 50) throw capability_error("no squarefree shifted norm found");
        Rat s = (k % 2 == 0) ? Rat(k / 2) : Rat(-(k + 1) / 2);
        PolyQ norm = resultant(m_lift, shifted_bivariate(g, s));
        if (is_zero(norm) || poly_gcd(norm, norm.derivative()).degree() != 0) continue;
        if (norm.degree() > norm_degree_cap)
            throw capability_error("norm degree exceeds factorization capability");
        auto rational_factors = factor_over_q(norm, std::max(16, norm.degree()));
        std::vector<PolyF> out;
        for (const auto& [nf, mult] : rational_factors.factors) {
            (void)mult;  // squarefree norm: all multiplicities 1
            NumberFieldElem shift = NumberFieldElem(s) * NumberFieldElem::generator(field);
            PolyF arg = PolyF::from_coeffs({shift, NumberFieldElem(Rat(1))});
            PolyF nf_shifted = evaluate_into(nf, arg, [&](const Rat& c) {
                return PolyF(NumberFieldElem(field, PolyQ(c)));
            });
            PolyF f = poly_gcd(g, nf_shifted);
            if (f.degree() > 0) out.push_back(f);
        }
        return out;
    }
}

} // namespace

FieldFactorization factor_over_field(const PolyF& f, int norm_degree_cap) {
    if (is_zero(f)) throw usage_error("cannot factor the zero polynomial");
    NumberFieldPtr field = coefficient_field(f);
    PolyF g = normalize_field(f, field);
    FieldFactorization result;
    result.unit = g.leading();
    g = monic(g);

    PolyQ as_rational;
    if (field->is_rational() && try_rational_poly(g, as_rational)) {
        for (auto& [fac, mult] : lift_rational_factors(as_rational, field, std::max(16, as_rational.degree())))
            result.factors.emplace_back(std::move(fac), mult);
        return result;
    }

    for (const auto& [sf, mult] : squarefree_decomposition(g))
        for (const auto& irr : trager_squarefree(sf, field, norm_degree_cap))
            result.factors.emplace_back(irr, mult);
    std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.second < b.second;
    });
    return result;
}

std::vector<NumberFieldElem> roots_in_field(const PolyF& f) {
    std::vector<NumberFieldElem> roots;
    for (const auto& [fac, mult] : factor_over_field(f).factors) {
        (void)mult;
        if (fac.degree() == 1) roots.push_back(-fac.coeff(0));
    }
    std::sort(roots.begin(), roots.end(), canonical_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

AdjoinRootResult adjoin_root(const NumberFieldPtr& base, const PolyF& m, int degree_bound) {
    if (is_zero(m)) throw usage_error("adjoin_root of the zero polynomial");
    PolyF g = normalize_field(m, base);
    if (g.degree() < 1) throw usage_error("adjoin_root needs degree >= 1");
    g = squarefree_part(g);

    auto fac = factor_over_field(g);
    // Prefer a root already in the field (largest in the canonical order).
    const PolyF* best = nullptr;
    for (const auto& [h, mult] : fac.factors) {
        (void)mult;
        if (h.degree() == 1 && (!best || canonical_less(-best->coeff(0), -h.coeff(0))))
            best = &h;
    }
    if (best) {
        AdjoinRootResult r;
        r.field = base;
        r.root = -best->coeff(0);
        r.base_generator_image = NumberFieldElem::generator(base);
        r.grew = false;
        return r;
    }
    for (const auto& [h, mult] : fac.factors) {
        (void)mult;
        if (!best || h.degree() < best->degree()) best = &h;
    }
    const PolyF& h = *best;
    const long new_degree = static_cast<long>(base->degree()) * h.degree();
    if (new_degree > degree_bound)
        throw capability_error("extension degree " + std::to_string(new_degree) + " exceeds bound " +
                               std::to_string(degree_bound) + " while adjoining a root of " +
                               to_string(h.leading()) + "-led polynomial of degree " +
                               std::to_string(h.degree()));

    if (base->is_rational()) {
        // Direct extension of Q; h already has rational coefficients.
        PolyQ hq;
        if (!try_rational_poly(h, hq)) throw usage_error("unexpected irrational residue over Q");
        auto field = NumberField::make_unchecked(monic(hq));
        AdjoinRootResult r;
        r.field = field;
        r.root = NumberFieldElem::generator(field);
        r.base_generator_image = NumberFieldElem(field, PolyQ(base->generator_value()));
        r.grew = true;
        return r;
    }

    // Primitive element gamma = beta + t*a via resultant elimination.
    const PolyQ& M = base->minpoly();
    PolyY m_lift = lift_bivariate(M);
    for (int k = 1;; ++k) {
        if (k > 50) throw capability_error("no squarefree primitive-element resultant found");
        Rat t = (k % 2 == 1) ? Rat((k + 1) / 2) : Rat(-k / 2);
        PolyQ H = resultant(m_lift, shifted_bivariate(h, t));
        if (is_zero(H) || poly_gcd(H, H.derivative()).degree() != 0) continue;
        auto field = NumberField::make_unchecked(monic(H));
        NumberFieldElem gamma = NumberFieldElem::generator(field);

        // Recover the old generator: gcd of M(y) and h-image(gamma - t*y) is linear.
        PolyF my = lift_poly(M, field);
        PolyF arg = PolyF::from_coeffs({gamma, NumberFieldElem(-t)});
        PolyF hy;
        {
            // h with a -> y, x -> gamma - t*y, as a polynomial in y over the new field.
            PolyF acc;
            for (int i = h.degree(); i >= 0; --i) {
                const PolyQ r = h.coeff(i).residue();
                PolyF coeff_poly = lift_poly(r, field);
                acc = acc * arg + coeff_poly;
            }
            hy = acc;
        }
        PolyF lin = poly_gcd(my, hy);
        if (lin.degree() != 1) continue;
        NumberFieldElem a_img = -lin.coeff(0);
        NumberFieldElem beta = gamma - NumberFieldElem(t) * a_img;

        AdjoinRootResult r;
        r.field = field;
        r.root = beta;
        r.base_generator_image = a_img;
        r.grew = true;
        return r;
    }
}

AdjoinRootResult adjoin_root(const NumberFieldPtr& base, const PolyQ& m, int degree_bound) {
    return adjoin_root(base, lift_poly(m, base), degree_bound);
}

bool canonical_less(const NumberFieldElem& a, const NumberFieldElem& b) {
    NumberFieldElem x = a, y = b;
    NumberFieldElem::unify(x, y);
    const int dx = x.residue().degree(), dy = y.residue().degree();
    if (dx != dy) return dx < dy;
    for (int i = std::max(dx, dy); i >= 0; --i) {
        if (x.residue().coeff(i) != y.residue().coeff(i))
            return x.residue().coeff(i) < y.residue().coeff(i);
    }
    return false;
}

std::string to_string(const NumberFieldElem& e, const std::string& sym) {
    const PolyQ& r = e.residue();
    if (is_zero(r)) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = r.degree(); i >= 0; --i) {
        Rat c = r.coeff(i);
        if (is_zero(c)) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit_coeff = (mag == 1) && i > 0;
        if (!unit_coeff) os << to_string(mag);
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << sym;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string field_to_string(const NumberFieldPtr& f, const std::string& sym) {
    if (f->is_rational() && f->generator_value() == 0) return "Q";
    std::ostringstream os;
    os << "Q[" << sym << "]/(";
    const PolyQ& m = f->minpoly();
    bool first = true;
    for (int i = m.degree(); i >= 0; --i) {
        Rat c = m.coeff(i);
        if (is_zero(c)) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit_coeff = (mag == 1) && i > 0;
        if (!unit_coeff) os << to_string(mag);
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << sym;
            if (i > 1) os << "^" << i;
        }
    }
    os << ")";
    return os.str();
}

} // namespace quadsolv
