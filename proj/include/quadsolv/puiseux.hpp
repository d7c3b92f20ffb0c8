#pragma once

#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "quadsolv/diff_field.hpp"
#include "quadsolv/diff_poly.hpp"

namespace quadsolv {

inline std::string exponent_string(long j, int ram) {
    if (j % ram == 0) return std::to_string(j / ram);
    return std::to_string(j) + "/" + std::to_string(ram);
}

// Coefficient embeddings from the base field Q(x) into the series
// coefficient field.
inline RatFunc embed_base(const RatFunc& f, const RatFunc*) { return f; }
inline ExtRatFunc embed_base(const RatFunc& f, const ExtRatFunc*) { return lift_to_ext(f); }
inline NumberFieldElem embed_base(const RatFunc& f, const NumberFieldElem*) {
    if (!f.is_constant())
        throw usage_error("cannot embed a non-constant rational function into a constant field");
    return NumberFieldElem(f.constant_value());
}

// Truncated Puiseux series in a transcendental theta with descending
// exponents j/ram.  When a floor is present, terms with exponent <= floor
// are unknown; without a floor the series is exact.  A derivation regime
// may be attached to support theta' = f or theta' = f*theta.
template <class F>
class PuiseuxSeries {
public:
    PuiseuxSeries() = default;  // exact zero, ramification 1

    explicit PuiseuxSeries(int v) {
        if (v != 0) terms_[0] = F(v);
    }

    static PuiseuxSeries monomial(F c, long j, int ram = 1) {
        PuiseuxSeries s;
        s.ram_ = ram;
        if (!is_zero(c)) s.terms_[j] = std::move(c);
        return s;
    }

    static PuiseuxSeries constant(F c) { return monomial(std::move(c), 0, 1); }

    // Exact polynomial in theta (ascending coefficient list, exponent = index).
    template <class K>
    static PuiseuxSeries from_polynomial(const Polynomial<K>& p) {
        PuiseuxSeries s;
        for (int i = 0; i <= p.degree(); ++i) {
            K c = p.coeff(i);
            if (!is_zero(c)) s.terms_[i] = F(c);
        }
        return s;
    }

    int ram() const { return ram_; }
    const std::map<long, F>& terms() const { return terms_; }
    const std::optional<long>& floor() const { return floor_; }
    const std::optional<DerivationRegime>& regime() const { return regime_; }

    bool is_exact() const { return !floor_.has_value(); }
    bool has_terms() const { return !terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && is_exact(); }
    // No certified terms above a floor.
    bool is_zero_marker() const { return terms_.empty() && floor_.has_value(); }

    struct Leading {
        long j;
        int ram;
        F coeff;
    };

    std::optional<Leading> leading() const {
        if (terms_.empty()) return std::nullopt;
        auto it = terms_.rbegin();
        return Leading{it->first, ram_, it->second};
    }

    Rat leading_exponent() const {
        auto l = leading();
        if (!l) throw usage_error("series has no certified leading term");
        return Rat(l->j, l->ram);
    }

    // The stored terms reinterpreted as an exact (finite) series.
    PuiseuxSeries as_exact() const {
        PuiseuxSeries s = *this;
        s.floor_.reset();
        return s;
    }

    PuiseuxSeries with_regime(DerivationRegime r) const {
        PuiseuxSeries s = *this;
        if (s.regime_ && !(*s.regime_ == r))
            throw usage_error("series already carries a different derivation regime");
        s.regime_ = std::move(r);
        return s;
    }

    PuiseuxSeries with_floor(long floor_j, int floor_ram) const {
        PuiseuxSeries s = *this;
        // round toward a higher floor when the lattice does not match: a
        // larger unknown region is always a sound claim
        long num = floor_j * s.ram_;
        long f = num / floor_ram;
        if (num % floor_ram != 0 && num > 0) ++f;
        if (s.floor_) f = std::max(f, *s.floor_);
        s.floor_ = f;
        s.drop_below_floor();
        return s;
    }

    // Lift to a ramification that is a multiple of the current one.
    PuiseuxSeries with_ram(int target) const {
        if (target % ram_ != 0) throw usage_error("ramification lift must be a multiple");
        const long k = target / ram_;
        if (k == 1) return *this;
        PuiseuxSeries s;
        s.ram_ = target;
        s.regime_ = regime_;
        if (floor_) s.floor_ = *floor_ * k;
        for (const auto& [j, c] : terms_) s.terms_[j * k] = c;
        return s;
    }

    // Divide ramification and exponents by their gcd.
    PuiseuxSeries normalized() const {
        long g = ram_;
        for (const auto& [j, c] : terms_) {
            (void)c;
            g = std::gcd(g, std::abs(j));
        }
        if (floor_) g = std::gcd(g, std::abs(*floor_));
        if (g <= 1) return *this;
        PuiseuxSeries s;
        s.ram_ = static_cast<int>(ram_ / g);
        s.regime_ = regime_;
        if (floor_) s.floor_ = *floor_ / g;
        for (const auto& [j, c] : terms_) s.terms_[j / g] = c;
        return s;
    }

    PuiseuxSeries operator-() const {
        PuiseuxSeries s = *this;
        for (auto& [j, c] : s.terms_) {
            (void)j;
            c = F() - c;
        }
        return s;
    }

    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        auto [x, y] = aligned(a, b);
        PuiseuxSeries r;
        r.ram_ = x.ram_;
        r.regime_ = x.regime_;
        if (x.floor_ || y.floor_)
            r.floor_ = std::max(x.floor_.value_or(std::numeric_limits<long>::min()),
                                y.floor_.value_or(std::numeric_limits<long>::min()));
        r.terms_ = x.terms_;
        for (const auto& [j, c] : y.terms_) {
            auto it = r.terms_.find(j);
            if (it == r.terms_.end()) {
                r.terms_[j] = c;
            } else {
                it->second = it->second + c;
                if (is_zero(it->second)) r.terms_.erase(it);
            }
        }
        r.drop_below_floor();
        return r;
    }

    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        if (a.is_exact_zero() || b.is_exact_zero()) {
            PuiseuxSeries r;
            r.regime_ = merge_regimes(a.regime_, b.regime_);
            return r;
        }
        auto [x, y] = aligned(a, b);
        PuiseuxSeries r;
        r.ram_ = x.ram_;
        r.regime_ = x.regime_;
        // unknown-tail interactions bound the trustworthy region
        std::optional<long> bound;
        auto consider = [&](const std::optional<long>& f, const PuiseuxSeries& other) {
            if (!f) return;
            long partner = other.terms_.empty() ? other.floor_.value_or(0) : other.terms_.rbegin()->first;
            long v = *f + partner;
            bound = bound ? std::max(*bound, v) : v;
        };
        consider(x.floor_, y);
        consider(y.floor_, x);
        r.floor_ = bound;
        for (const auto& [ja, ca] : x.terms_) {
            for (const auto& [jb, cb] : y.terms_) {
                const long j = ja + jb;
                if (r.floor_ && j <= *r.floor_) continue;
                F prod = ca * cb;
                auto it = r.terms_.find(j);
                if (it == r.terms_.end()) {
                    if (!is_zero(prod)) r.terms_[j] = std::move(prod);
                } else {
                    it->second = it->second + prod;
                    if (is_zero(it->second)) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    PuiseuxSeries& operator+=(const PuiseuxSeries& o) { return *this = *this + o; }
    PuiseuxSeries& operator-=(const PuiseuxSeries& o) { return *this = *this - o; }
    PuiseuxSeries& operator*=(const PuiseuxSeries& o) { return *this = *this * o; }

    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        auto [x, y] = aligned(a, b);
        return x.terms_ == y.terms_ && x.floor_ == y.floor_;
    }

    // Reciprocal.  Needs a certified leading term; exact multi-term input
    // needs an explicit target floor, since the inverse does not terminate.
    PuiseuxSeries invert(std::optional<Rat> floor_exponent = std::nullopt) const {
        auto lead = leading();
        if (!lead) {
            if (is_exact()) throw usage_error("division by the zero series");
            throw truncation_error("cannot invert: no certified leading term above floor " +
                                   exponent_string(*floor_, ram_));
        }
        const long l = lead->j;
        PuiseuxSeries work = *this;
        std::optional<long> target;  // in work.ram_ units
        if (floor_exponent) {
            long scaled_ram = static_cast<int>(rat_den(*floor_exponent));
            int common = static_cast<int>(std::lcm(static_cast<long>(ram_), scaled_ram));
            work = with_ram(common);
            target = static_cast<long>(rat_num(*floor_exponent)) * (common / scaled_ram);
        }
        if (work.floor_) {
            long prop = *work.floor_ - 2 * (l * (work.ram_ / ram_));
            target = target ? std::max(*target, prop) : prop;
        }
        if (!target) {
            if (terms_.size() == 1) {  // exact monomial
                PuiseuxSeries r;
                r.ram_ = ram_;
                r.regime_ = regime_;
                r.terms_[-l] = F(1) / lead->coeff;
                return r;
            }
            throw usage_error("inverting an exact multi-term series needs a target floor");
        }

        const long ll = l * (work.ram_ / ram_);
        PuiseuxSeries q;
        q.ram_ = work.ram_;
        q.regime_ = work.regime_;
        F lead_inv = F(1) / lead->coeff;
        PuiseuxSeries rem = PuiseuxSeries::monomial(F(1), 0, work.ram_);  // 1 - work*q
        while (true) {
            auto rl = rem.leading();
            if (!rl) break;
            long qexp = rl->j - ll;
            if (qexp <= *target) break;
            F qc = rl->coeff * lead_inv;
            PuiseuxSeries qt = PuiseuxSeries::monomial(qc, qexp, work.ram_);
            q += qt;
            rem -= qt * work;
        }
        if (!(rem.is_exact_zero() && work.is_exact())) {
            q.floor_ = *target;
            q.drop_below_floor();
        }
        return q;
    }

    PuiseuxSeries derive_series() const {
        if (!regime_) throw usage_error("derivation needs a regime (theta' = f or f*theta)");
        const RatFunc& f = regime_->f;
        const F fe = embed_base(f, static_cast<const F*>(nullptr));
        PuiseuxSeries r;
        r.ram_ = ram_;
        r.regime_ = regime_;
        r.floor_ = floor_;
        auto add = [&](long j, const F& v) {
            if (is_zero(v)) return;
            if (r.floor_ && j <= *r.floor_) return;
            auto it = r.terms_.find(j);
            if (it == r.terms_.end()) {
                r.terms_[j] = v;
            } else {
                it->second = it->second + v;
                if (is_zero(it->second)) r.terms_.erase(it);
            }
        };
        for (const auto& [j, c] : terms_) {
            const F dc = derive(c);
            if (regime_->kind == RegimeKind::integral) {
                add(j, dc);
                if (j != 0) add(j - ram_, embed_base(RatFunc(Rat(j, ram_)), static_cast<const F*>(nullptr)) * c * fe);
            } else {
                add(j, dc + embed_base(RatFunc(Rat(j, ram_)), static_cast<const F*>(nullptr)) * fe * c);
            }
        }
        return r;
    }

private:
    static std::optional<DerivationRegime> merge_regimes(const std::optional<DerivationRegime>& a,
                                                         const std::optional<DerivationRegime>& b) {
        if (!a) return b;
        if (!b) return a;
        if (!(*a == *b)) throw usage_error("series carry different derivation regimes");
        return a;
    }

    static std::pair<PuiseuxSeries, PuiseuxSeries> aligned(const PuiseuxSeries& a,
                                                           const PuiseuxSeries& b) {
        auto regime = merge_regimes(a.regime_, b.regime_);
        int common = static_cast<int>(std::lcm(static_cast<long>(a.ram_), static_cast<long>(b.ram_)));
        PuiseuxSeries x = a.with_ram(common);
        PuiseuxSeries y = b.with_ram(common);
        x.regime_ = regime;
        y.regime_ = regime;
        return {std::move(x), std::move(y)};
    }

    void drop_below_floor() {
        if (!floor_) return;
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->first <= *floor_) ? terms_.erase(it) : ++it;
    }

    int ram_ = 1;
    std::map<long, F> terms_;
    std::optional<long> floor_;
    std::optional<DerivationRegime> regime_;
};

template <class F>
bool is_zero(const PuiseuxSeries<F>& s) {
    return s.is_exact_zero();
}

template <class F>
PuiseuxSeries<F> pow(const PuiseuxSeries<F>& s, long e) {
    if (e < 0) return pow(s.invert(), -e);
    PuiseuxSeries<F> acc = PuiseuxSeries<F>::monomial(F(1), 0, s.ram());
    PuiseuxSeries<F> base = s;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

template <class F>
PuiseuxSeries<F> derive(const PuiseuxSeries<F>& s) {
    return s.derive_series();
}

// T evaluated with u^(i) := the i-th derivative of s.
template <class F>
PuiseuxSeries<F> substitute_into_diffpoly(const DiffPoly& t, const PuiseuxSeries<F>& s) {
    if (t.order() > 0 && !s.regime())
        throw usage_error("substitution with derivatives needs a series regime");
    return substitute_generic(t, s, [&](const RatFunc& c) {
        auto cs = PuiseuxSeries<F>::constant(embed_base(c, static_cast<const F*>(nullptr)));
        return s.regime() ? cs.with_regime(*s.regime()) : cs;
    });
}

inline CoeffFormat series_coeff_format(const Rat& c) { return format_coeff(c); }
inline CoeffFormat series_coeff_format(const NumberFieldElem& c) { return format_coeff(c); }
inline CoeffFormat series_coeff_format(const RatFunc& c) { return format_coeff_ratfunc(c); }
inline CoeffFormat series_coeff_format(const ExtRatFunc& c) { return format_coeff_ext(c); }

template <class F>
std::string to_string(const PuiseuxSeries<F>& s, const std::string& var = "t") {
    std::ostringstream os;
    bool first = true;
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        CoeffFormat f = series_coeff_format(it->second);
        if (first) {
            if (f.negative) os << "-";
            first = false;
        } else {
            os << (f.negative ? " - " : " + ");
        }
        const long j = it->first;
        std::string mono;
        if (j != 0) {
            mono = var;
            if (j != s.ram()) {
                std::string e = exponent_string(j, s.ram());
                const bool fancy = e.find('/') != std::string::npos || e.find('-') != std::string::npos;
                mono += fancy ? ("^(" + e + ")") : ("^" + e);
            }
        }
        if (mono.empty()) {
            os << f.magnitude;
        } else {
            if (!f.is_one) os << (f.composite ? "(" + f.magnitude + ")" : f.magnitude) << "*";
            os << mono;
        }
    }
    if (s.floor()) {
        if (!first) os << " + ";
        os << "O(" << var << "^(" << exponent_string(*s.floor(), s.ram()) << "))";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

} // namespace quadsolv
