#include "quadsolv/diff_field.hpp"

#include <sstream>

namespace quadsolv {

namespace {
using PRF = RationalFunction<RatFunc>;
using PolyRF = Polynomial<RatFunc>;

PolyRF derive_coefficients(const PolyRF& p) {
    std::vector<RatFunc> c;
    for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i).derivative());
    return PolyRF::from_coeffs(std::move(c));
}

// dR/dx with y held constant: coefficients differentiate in Q(x).
PRF partial_x(const PRF& r) {
    const PolyRF &n = r.num(), &d = r.den();
    return PRF(derive_coefficients(n) * d - n * derive_coefficients(d), d * d);
}

// dR/dy: the formal derivative in the main variable.
PRF partial_y(const PRF& r) { return r.derivative(); }

} // namespace

ParametricRatFunc derive(const ParametricRatFunc& e) {
    PRF w = (e.regime.kind == RegimeKind::integral)
                ? PRF(e.regime.f)
                : PRF(e.regime.f) * PRF::variable();
    return {partial_x(e.elem) + partial_y(e.elem) * w, e.regime};
}

ParametricRatFunc substitute_shift(const ParametricRatFunc& e, const Rat& rho) {
    if (e.regime.kind != RegimeKind::integral)
        throw usage_error("shift substitution y -> y + rho needs the integral regime");
    RatFunc r{rho};
    return {PRF(shifted(e.elem.num(), r), shifted(e.elem.den(), r)), e.regime};
}

ParametricRatFunc substitute_scale(const ParametricRatFunc& e, const Rat& mu) {
    if (e.regime.kind != RegimeKind::exp_integral)
        throw usage_error("scale substitution y -> mu*y needs the exponential-of-integral regime");
    if (is_zero(mu)) throw usage_error("scale substitution needs mu != 0");
    auto scale = [&](const PolyRF& p) {
        std::vector<RatFunc> c;
        RatFunc power{Rat(1)}, m{mu};
        for (int i = 0; i <= p.degree(); ++i) {
            c.push_back(p.coeff(i) * power);
            power = power * m;
        }
        return PolyRF::from_coeffs(std::move(c));
    };
    return {PRF(scale(e.elem.num()), scale(e.elem.den())), e.regime};
}

std::string to_string(const ParametricRatFunc& e, const std::string& var) {
    const auto& r = e.elem;
    auto poly_str = [&](const PolyRF& p) {
        return poly_to_string<RatFunc>(p, var, [](const RatFunc& c) { return format_coeff_ratfunc(c); });
    };
    std::string num = poly_str(r.num());
    if (r.is_polynomial()) return num;
    std::string den = poly_str(r.den());
    if (num.find(' ') != std::string::npos) num = "(" + num + ")";
    if (den.find(' ') != std::string::npos || den.find('*') != std::string::npos)
        den = "(" + den + ")";
    return num + "/" + den;
}

// ---- multivariate payloads ------------------------------------------------

namespace {
void trim_key(std::vector<int>& k) {
    while (!k.empty() && k.back() == 0) k.pop_back();
}
} // namespace

MultiPoly MultiPoly::constant(const Rat& c) {
    MultiPoly p;
    if (!is_zero(c)) p.terms[{}] = c;
    return p;
}

MultiPoly MultiPoly::variable(int index) {
    MultiPoly p;
    std::vector<int> k(static_cast<size_t>(index) + 1, 0);
    k.back() = 1;
    p.terms[k] = Rat(1);
    return p;
}

int MultiPoly::max_var() const {
    int m = -1;
    for (const auto& [k, c] : terms) {
        (void)c;
        m = std::max(m, static_cast<int>(k.size()) - 1);
    }
    return m;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [k, c] : r.terms) {
        (void)k;
        c = -c;
    }
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [k, c] : b.terms) {
        auto it = r.terms.find(k);
        if (it == r.terms.end()) {
            r.terms[k] = c;
        } else {
            it->second += c;
            if (is_zero(it->second)) r.terms.erase(it);
        }
    }
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) {
            std::vector<int> k(std::max(ka.size(), kb.size()), 0);
            for (size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
            for (size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
            trim_key(k);
            Rat& slot = r.terms[k];
            slot += ca * cb;
            if (is_zero(slot)) r.terms.erase(k);
        }
    }
    return r;
}

std::string to_string(const MultiPoly& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // iterate descending so the lexicographically-largest monomial leads
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [k, c] = *it;
        CoeffFormat f = format_coeff(c);
        if (first) {
            if (f.negative) os << "-";
            first = false;
        } else {
            os << (f.negative ? " - " : " + ");
        }
        std::string mono;
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (i == 0) ? "x" : ("t" + std::to_string(i));
            if (k[i] > 1) mono += "^" + std::to_string(k[i]);
        }
        if (mono.empty()) {
            os << f.magnitude;
        } else {
            if (!f.is_one) os << (f.composite ? "(" + f.magnitude + ")" : f.magnitude) << "*";
            os << mono;
        }
    }
    return os.str();
}

MultiRational::MultiRational(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero_poly()) throw validation_error("payload has a zero denominator");
    if (num.is_zero_poly()) {
        den = MultiPoly::constant(Rat(1));
        return;
    }
    // scale so the denominator becomes integer-primitive with a positive
    // leading (lexicographically largest) coefficient
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [k, c] : den.terms) {
        (void)k;
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(rat_num(c)));
        den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
    }
    Rat scale(num_gcd, den_lcm);
    if (den.terms.rbegin()->second < 0) scale = -scale;
    MultiPoly inv = MultiPoly::constant(1 / scale);
    num = num * inv;
    den = den * inv;
}

MultiRational MultiRational::operator-() const {
    MultiRational r = *this;
    r.num = -r.num;
    return r;
}

MultiRational operator+(const MultiRational& a, const MultiRational& b) {
    return MultiRational(a.num * b.den + b.num * a.den, a.den * b.den);
}

MultiRational operator-(const MultiRational& a, const MultiRational& b) { return a + (-b); }

MultiRational operator*(const MultiRational& a, const MultiRational& b) {
    return MultiRational(a.num * b.num, a.den * b.den);
}

MultiRational operator/(const MultiRational& a, const MultiRational& b) {
    if (b.is_zero_value()) throw usage_error("division by a zero payload");
    return MultiRational(a.num * b.den, a.den * b.num);
}

bool operator==(const MultiRational& a, const MultiRational& b) {
    return (a.num * b.den) == (b.num * a.den);
}

std::string to_string(const MultiRational& f) {
    std::string num = to_string(f.num);
    if (f.den == MultiPoly::constant(Rat(1))) return num;
    std::string den = to_string(f.den);
    if (num.find(' ') != std::string::npos) num = "(" + num + ")";
    if (den.find(' ') != std::string::npos || den.find('*') != std::string::npos)
        den = "(" + den + ")";
    return num + "/" + den;
}

std::string step_kind_name(TowerStep::Kind k) {
    switch (k) {
        case TowerStep::Kind::algebraic: return "algebraic";
        case TowerStep::Kind::integral: return "integral";
        case TowerStep::Kind::exp_integral: return "exp_integral";
    }
    return "?";
}

TowerDescriptor validate_tower(const TowerDescriptor& t) {
    TowerDescriptor out;
    for (size_t i = 0; i < t.steps.size(); ++i) {
        const TowerStep& s = t.steps[i];
        const int allowed = static_cast<int>(i);  // x plus generators t1..ti
        const std::string where = "tower step " + std::to_string(i + 1);
        switch (s.kind) {
            case TowerStep::Kind::integral:
            case TowerStep::Kind::exp_integral: {
                if (s.f.max_var() > allowed)
                    throw validation_error(where + ": payload references a generator not yet adjoined");
                if (s.kind == TowerStep::Kind::exp_integral && s.f.is_zero_value())
                    throw validation_error(where + ": exponential-of-integral payload must be nonzero");
                out.steps.push_back(s.kind == TowerStep::Kind::integral
                                        ? TowerStep::integral(s.f)
                                        : TowerStep::exp_integral(s.f));
                break;
            }
            case TowerStep::Kind::algebraic: {
                if (s.minpoly.degree() < 1)
                    throw validation_error(where + ": algebraic step needs a minimal polynomial of degree >= 1");
                for (int k = 0; k <= s.minpoly.degree(); ++k)
                    if (s.minpoly.coeff(k).max_var() > allowed)
                        throw validation_error(where + ": payload references a generator not yet adjoined");
                // canonical form: monic in w
                Polynomial<MultiRational> m = s.minpoly;
                MultiRational lead = m.leading();
                std::vector<MultiRational> c;
                for (int k = 0; k <= m.degree(); ++k) c.push_back(m.coeff(k) / lead);
                out.steps.push_back(TowerStep::algebraic(Polynomial<MultiRational>::from_coeffs(std::move(c))));
                break;
            }
        }
    }
    return out;
}

} // namespace quadsolv
