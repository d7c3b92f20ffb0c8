#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "quadsolv/errors.hpp"
#include "quadsolv/rational.hpp"

namespace quadsolv {

// Dense univariate polynomial over an exact commutative ring K, coefficients
// stored ascending.  Ring operations (+, -, *) work for any K; division,
// gcd and friends additionally need K to be a field.  The zero polynomial is
// the empty coefficient list and has degree -1.
template <class K>
class Polynomial {
public:
    Polynomial() = default;

    Polynomial(K constant) {
        if (!is_zero(constant)) c_.push_back(std::move(constant));
    }

    static Polynomial from_coeffs(std::vector<K> coeffs) {
        Polynomial p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static Polynomial variable() { return monomial(1, K(1)); }

    static Polynomial monomial(int n, K coeff) {
        Polynomial p;
        if (!is_zero(coeff)) {
            p.c_.assign(static_cast<size_t>(n) + 1, K());
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero_poly() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K();
        return c_[static_cast<size_t>(i)];
    }

    const K& leading() const {
        if (c_.empty()) throw usage_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    const std::vector<K>& coeffs() const { return c_; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K());
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        r.trim();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return Polynomial();
        Polynomial r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend Polynomial operator*(const K& s, const Polynomial& p) {
        Polynomial r;
        if (is_zero(s)) return r;
        r.c_ = p.c_;
        for (auto& x : r.c_) x = s * x;
        r.trim();
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Formal derivative in the main variable; coefficients are constants.
    Polynomial derivative() const {
        Polynomial r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = K(static_cast<int>(i)) * c_[i];
        r.trim();
        return r;
    }

    K evaluate(const K& x) const {
        K acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Coefficients reversed: x^deg * p(1/x).
    Polynomial reversed() const {
        Polynomial r = *this;
        std::reverse(r.c_.begin(), r.c_.end());
        r.trim();
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

template <class K>
bool is_zero(const Polynomial<K>& p) {
    return p.is_zero_poly();
}

// Horner evaluation into another ring R; embed maps K coefficients into R.
template <class R, class K, class Embed>
R evaluate_into(const Polynomial<K>& p, const R& x, Embed embed) {
    R acc{};
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + embed(p.coeff(i));
    return acc;
}

template <class K>
Polynomial<K> pow(const Polynomial<K>& p, long e) {
    if (e < 0) throw usage_error("negative polynomial power");
    Polynomial<K> acc{K(1)}, base = p;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// p(x + a).
template <class K>
Polynomial<K> shifted(const Polynomial<K>& p, const K& a) {
    Polynomial<K> x_plus_a = Polynomial<K>::from_coeffs({a, K(1)});
    return evaluate_into(p, x_plus_a, [](const K& c) { return Polynomial<K>(c); });
}

// ---- field-coefficient operations -------------------------------------

template <class K>
Polynomial<K> monic(const Polynomial<K>& p) {
    if (is_zero(p)) return p;
    K inv = K(1) / p.leading();
    return inv * p;
}

template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divmod(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (is_zero(b)) throw usage_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial<K>(), a};
    std::vector<K> rem(a.coeffs());
    std::vector<K> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, K());
    const K inv_lead = K(1) / b.leading();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        K q = rem[static_cast<size_t>(i + b.degree())] * inv_lead;
        quo[static_cast<size_t>(i)] = q;
        if (is_zero(q)) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(i + j)] = rem[static_cast<size_t>(i + j)] - q * b.coeff(j);
    }
    rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
    return {Polynomial<K>::from_coeffs(std::move(quo)), Polynomial<K>::from_coeffs(std::move(rem))};
}

template <class K>
Polynomial<K> operator/(const Polynomial<K>& a, const Polynomial<K>& b) {
    return divmod(a, b).first;
}

template <class K>
Polynomial<K> operator%(const Polynomial<K>& a, const Polynomial<K>& b) {
    return divmod(a, b).second;
}

// Division known to be exact; throws if a remainder appears.
template <class K>
Polynomial<K> exact_div(const Polynomial<K>& a, const Polynomial<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!is_zero(r)) throw usage_error("polynomial division expected to be exact was not");
    return q;
}

inline Rat exact_div(const Rat& a, const Rat& b) { return rat_div(a, b); }

// Monic gcd by the Euclidean algorithm.
template <class K>
Polynomial<K> poly_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    Polynomial<K> x = a, y = b;
    while (!is_zero(y)) {
        auto r = x % y;
        x = y;
        y = monic(r);
    }
    return monic(x);
}

namespace detail {

// Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a by b,
// computable with ring operations only.
template <class K>
Polynomial<K> pseudo_remainder(Polynomial<K> a, const Polynomial<K>& b) {
    const K lb = b.leading();
    while (!is_zero(a) && a.degree() >= b.degree()) {
        const int k = a.degree();
        Polynomial<K> shifted = Polynomial<K>::monomial(k - b.degree(), a.leading());
        a = lb * a - shifted * b;
        if (!is_zero(a) && a.degree() >= k)
            throw error("pseudo-division failed to reduce the degree");
    }
    return a;
}

} // namespace detail

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> poly_ext_gcd(const Polynomial<K>& a,
                                                                     const Polynomial<K>& b) {
    Polynomial<K> r0 = a, r1 = b;
    Polynomial<K> s0{K(1)}, s1;
    Polynomial<K> t0, t1{K(1)};
    while (!is_zero(r1)) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        auto s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        auto t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (is_zero(r0)) return {r0, s0, t0};
    K inv = K(1) / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& p) {
    if (p.degree() <= 0) return monic(p);
    auto g = poly_gcd(p, p.derivative());
    return monic(exact_div(p, g));
}

// Yun's squarefree decomposition over a characteristic-zero field.
// Returns monic pairwise-coprime squarefree factors with multiplicities;
// the product of f_i^{m_i} equals p up to a constant.
template <class K>
std::vector<std::pair<Polynomial<K>, int>> squarefree_decomposition(const Polynomial<K>& p) {
    std::vector<std::pair<Polynomial<K>, int>> out;
    if (p.degree() <= 0) return out;
    Polynomial<K> f = monic(p);
    Polynomial<K> a = poly_gcd(f, f.derivative());
    Polynomial<K> b = exact_div(f, a);
    Polynomial<K> c = exact_div(f.derivative(), a);
    Polynomial<K> d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial<K> ai = poly_gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = exact_div(b, ai);
        c = exact_div(d, ai);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// Lagrange interpolation through distinct nodes.
template <class K>
Polynomial<K> interpolate(const std::vector<std::pair<K, K>>& points) {
    Polynomial<K> acc;
    for (size_t i = 0; i < points.size(); ++i) {
        Polynomial<K> basis{K(1)};
        K denom{K(1)};
        for (size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            basis *= Polynomial<K>::from_coeffs({-points[j].first, K(1)});
            denom = denom * (points[i].first - points[j].first);
        }
        acc += (points[i].second / denom) * basis;
    }
    return acc;
}

template <class C>
C ring_pow(const C& base, long e) {
    C acc = C(1), b = base;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

// Sylvester resultant, rows of p first, computed by fraction-free (Bareiss)
// elimination so it stays exact over coefficient rings with exact division.
// Conventions for degenerate degrees: res(a, q) = a^deg(q) for constant
// nonzero a, and res of two constants is 1.
template <class C>
C resultant(const Polynomial<C>& p, const Polynomial<C>& q) {
    if (is_zero(p) || is_zero(q)) throw usage_error("resultant of the zero polynomial");
    const int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0) return C(1);
    if (m == 0) return ring_pow(p.coeff(0), n);
    if (n == 0) return ring_pow(q.coeff(0), m);

    const int size = m + n;
    std::vector<std::vector<C>> a(static_cast<size_t>(size), std::vector<C>(static_cast<size_t>(size), C()));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) a[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = p.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) a[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = q.coeff(n - j);

    int sign = 1;
    C prev = C(1);
    for (int k = 0; k < size - 1; ++k) {
        if (is_zero(a[k][k])) {
            int pivot = -1;
            for (int r = k + 1; r < size; ++r)
                if (!is_zero(a[r][k])) { pivot = r; break; }
            if (pivot < 0) return C();
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j)
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = C();
        }
        prev = a[k][k];
    }
    C det = a[static_cast<size_t>(size - 1)][static_cast<size_t>(size - 1)];
    return sign < 0 ? C() - det : det;
}

// ---- rational-coefficient helpers --------------------------------------

// Positive rational content; p / content(p) has coprime integer coefficients.
inline Rat content(const Polynomial<Rat>& p) {
    if (is_zero(p)) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const Rat& c : p.coeffs()) {
        if (is_zero(c)) continue;
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(rat_num(c)));
        den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
    }
    return Rat(num_gcd, den_lcm);
}

// Primitive part with positive leading coefficient.
inline Polynomial<Rat> primitive_part(const Polynomial<Rat>& p) {
    if (is_zero(p)) return p;
    Rat c = content(p);
    if (p.leading() < 0) c = -c;
    return (1 / c) * p;
}

// Monic gcd over Q through an integer primitive pseudo-remainder sequence;
// plain Euclidean remainders suffer heavy rational coefficient growth.
inline Polynomial<Rat> poly_gcd(const Polynomial<Rat>& a, const Polynomial<Rat>& b) {
    if (is_zero(a)) return monic(b);
    if (is_zero(b)) return monic(a);
    Polynomial<Rat> x = primitive_part(a), y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!is_zero(y)) {
        Polynomial<Rat> r = detail::pseudo_remainder(x, y);
        x = y;
        y = primitive_part(r);
    }
    return monic(x);
}

} // namespace quadsolv
