#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadsolv/printing.hpp"
#include "quadsolv/rational_function.hpp"

namespace quadsolv {

// Monomial in u, u', u'', ...: map from derivative order to exponent >= 1.
struct DiffMonomial {
    std::map<int, int> exps;

    int total_degree() const {
        int d = 0;
        for (const auto& [o, e] : exps) {
            (void)o;
            d += e;
        }
        return d;
    }

    // Sum of order * exponent over the factors.
    long xi_weight() const {
        long w = 0;
        for (const auto& [o, e] : exps) w += static_cast<long>(o) * e;
        return w;
    }

    int max_order() const { return exps.empty() ? -1 : exps.rbegin()->first; }

    DiffMonomial times(const DiffMonomial& o) const {
        DiffMonomial r = *this;
        for (const auto& [ord, e] : o.exps) r.exps[ord] += e;
        return r;
    }

    friend bool operator==(const DiffMonomial& a, const DiffMonomial& b) { return a.exps == b.exps; }
};

inline long xi_weight(const DiffMonomial& m) { return m.xi_weight(); }

// Display (and storage) order: xi-weight descending, then total degree
// descending, then exponent vectors lexicographically descending.
struct MonomialOrder {
    bool operator()(const DiffMonomial& a, const DiffMonomial& b) const {
        long wa = a.xi_weight(), wb = b.xi_weight();
        if (wa != wb) return wa > wb;
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.exps > b.exps;
    }
};

// Differential polynomial in u and its derivatives over Q(x).
class DiffPoly {
public:
    DiffPoly() = default;

    explicit DiffPoly(int v) {
        add_term(DiffMonomial{}, RatFunc(Rat(v)));
    }

    static DiffPoly constant(RatFunc c) {
        DiffPoly p;
        p.add_term(DiffMonomial{}, std::move(c));
        return p;
    }

    // u^(order)
    static DiffPoly u(int order = 0) {
        DiffPoly p;
        DiffMonomial m;
        m.exps[order] = 1;
        p.add_term(m, RatFunc(Rat(1)));
        return p;
    }

    static DiffPoly term(DiffMonomial m, RatFunc c) {
        DiffPoly p;
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    bool is_zero_poly() const { return terms_.empty(); }
    const std::map<DiffMonomial, RatFunc, MonomialOrder>& terms() const { return terms_; }

    // Highest derivative order appearing; -1 for constants.
    int order() const {
        int n = -1;
        for (const auto& [m, c] : terms_) {
            (void)c;
            n = std::max(n, m.max_order());
        }
        return n;
    }

    int degree() const {
        if (terms_.empty()) throw usage_error("degree of the zero differential polynomial");
        int d = 0;
        for (const auto& [m, c] : terms_) {
            (void)c;
            d = std::max(d, m.total_degree());
        }
        return d;
    }

    DiffPoly homogeneous_part(int d) const {
        DiffPoly p;
        for (const auto& [m, c] : terms_)
            if (m.total_degree() == d) p.add_term(m, c);
        return p;
    }

    RatFunc coeff(const DiffMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? RatFunc() : it->second;
    }

    RatFunc constant_term() const { return coeff(DiffMonomial{}); }

    DiffPoly operator-() const {
        DiffPoly r = *this;
        for (auto& [m, c] : r.terms_) {
            (void)m;
            c = -c;
        }
        return r;
    }

    friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
        DiffPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) { return a + (-b); }

    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
        DiffPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    friend DiffPoly operator*(const RatFunc& s, const DiffPoly& p) {
        DiffPoly r;
        for (const auto& [m, c] : p.terms_) r.add_term(m, s * c);
        return r;
    }

    DiffPoly& operator+=(const DiffPoly& o) { return *this = *this + o; }
    DiffPoly& operator-=(const DiffPoly& o) { return *this = *this - o; }
    DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }

    friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DiffPoly& a, const DiffPoly& b) { return !(a == b); }

    // d/dx: coefficients differentiate in Q(x), u^(i) differentiates to
    // u^(i+1) through the Leibnitz rule.
    DiffPoly total_derivative() const {
        DiffPoly r;
        for (const auto& [m, c] : terms_) {
            r.add_term(m, c.derivative());
            for (const auto& [ord, e] : m.exps) {
                DiffMonomial bumped = m;
                if (--bumped.exps[ord] == 0) bumped.exps.erase(ord);
                ++bumped.exps[ord + 1];
                r.add_term(bumped, RatFunc(Rat(e)) * c);
            }
        }
        return r;
    }

    void add_term(DiffMonomial m, RatFunc c) {
        if (is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

private:
    std::map<DiffMonomial, RatFunc, MonomialOrder> terms_;
};

inline bool is_zero(const DiffPoly& p) { return p.is_zero_poly(); }

inline DiffPoly pow(const DiffPoly& p, long e) {
    if (e < 0) throw usage_error("negative power of a differential polynomial");
    return ring_pow(p, e);
}

struct XiConditionResult {
    bool holds;
    RatFunc witness;  // sum of the top-xi-weight coefficients
    long max_weight;
};

// Theorem-1'-style gate data: the sum of coefficients of all monomials of
// maximal xi-weight, nonzero iff the condition holds.
inline XiConditionResult xi_condition(const DiffPoly& p) {
    if (is_zero(p)) throw usage_error("xi-condition of the zero polynomial");
    long top = 0;
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        top = std::max(top, m.xi_weight());
    }
    RatFunc sum;
    for (const auto& [m, c] : p.terms())
        if (m.xi_weight() == top) sum += c;
    return {!is_zero(sum), sum, top};
}

// Evaluate with u^(i) replaced by the i-th derivative of v.  Embed maps
// Q(x) coefficients into v's ring; derivation comes from v's type.
template <class V, class Embed>
V substitute_generic(const DiffPoly& t, const V& v, Embed embed) {
    std::vector<V> derivs{v};
    const int n = t.order();
    for (int i = 1; i <= n; ++i) derivs.push_back(derive(derivs.back()));
    V acc{};
    for (const auto& [m, c] : t.terms()) {
        V term = embed(c);
        for (const auto& [ord, e] : m.exps) term = term * ring_pow(derivs[static_cast<size_t>(ord)], static_cast<long>(e));
        acc = acc + term;
    }
    return acc;
}

inline RatFunc substitute(const DiffPoly& t, const RatFunc& v) {
    return substitute_generic(t, v, [](const RatFunc& c) { return c; });
}

inline ExtRatFunc substitute(const DiffPoly& t, const ExtRatFunc& v) {
    return substitute_generic(t, v, [](const RatFunc& c) { return lift_to_ext(c); });
}

inline ExtRatFunc substitute(const DiffPoly& t, const NumberFieldElem& v) {
    return substitute(t, ext_constant(v));
}

// Canonical rendering: derivatives as u, u', u'', u'''; orders >= 4 as
// u^(k); factors ascending by order; terms in storage order.
std::string to_string(const DiffPoly& p, const std::string& sym = "u");
std::string derivative_symbol(const std::string& sym, int order);

} // namespace quadsolv
