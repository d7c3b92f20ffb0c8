#include "quadsolv/int_factor.hpp"

#include <algorithm>

namespace quadsolv {

namespace {

Int mulmod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int r) {
    Int x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2;
        while (true) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // full cycle, try another c
            Int d = boost::multiprecision::gcd(diff, n);
            if (d == n) break;
            if (d != 1) return d;
        }
        if (c > 40) throw capability_error("integer factorization gave up (Pollard rho) on " + n.str());
    }
}

void factor_rec(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (miller_rabin_witness(n, a, d, r)) return false;
    return true;
}

std::map<Int, int> factor_integer(const Int& n) {
    std::map<Int, int> out;
    Int m = boost::multiprecision::abs(n);
    if (m <= 1) return out;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        while (m % p == 0) {
            ++out[p];
            m /= p;
        }
    }
    factor_rec(m, out);
    return out;
}

std::vector<Int> divisors(const Int& n, size_t max_divisors) {
    auto fac = factor_integer(n);
    std::vector<Int> out{1};
    for (const auto& [p, e] : fac) {
        size_t base = out.size();
        if (base * static_cast<size_t>(e + 1) > max_divisors)
            throw capability_error("too many divisors while factoring over Q");
        Int pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace quadsolv
