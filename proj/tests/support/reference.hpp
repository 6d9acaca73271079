#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's series or special-value code.

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <vector>

namespace ref {

using Q = mpq_class;
using Z = mpz_class;

inline Q qpow(long base, long e)
{
    Q r = 1;
    Q b = base;
    if (e < 0) {
        b = Q(1) / b;
        e = -e;
    }
    for (long i = 0; i < e; ++i)
        r *= b;
    return r;
}

/// Brute-force sum over all d in 1..n dividing n, weighted by include(d).
template <typename F>
Q divisor_sum(long n, long w, F&& include)
{
    Q acc = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0)
            acc += include(d) * qpow(d, w);
    return acc;
}

/// Truncated polynomial product by repeated multiplication.
inline std::vector<Z> poly_mul(const std::vector<Z>& a, const std::vector<Z>& b, std::size_t n)
{
    std::vector<Z> out(n);
    for (std::size_t i = 0; i < n && i < a.size(); ++i)
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

/// q^lead * prod_{n>=1} (1 + sign q^{stride n})^e for e >= 0, by repeated multiplication.
inline std::vector<Z> naive_product(std::size_t lead, int sign, std::size_t stride, unsigned e, std::size_t prec)
{
    std::vector<Z> acc(prec);
    acc[0] = 1;
    for (std::size_t n = 1; stride * n < prec; ++n) {
        std::vector<Z> factor(prec);
        factor[0] = 1;
        factor[stride * n] = sign;
        for (unsigned r = 0; r < e; ++r)
            acc = poly_mul(acc, factor, prec);
    }
    std::vector<Z> out(prec);
    for (std::size_t i = 0; i + lead < prec; ++i)
        out[i + lead] = acc[i];
    return out;
}

/// Bernoulli numbers via the Akiyama-Tanigawa algorithm (gives B_1 = +1/2).
inline std::vector<Q> bernoulli_akiyama_tanigawa(std::size_t n_max)
{
    std::vector<Q> out;
    std::vector<Q> a(n_max + 1);
    for (std::size_t m = 0; m <= n_max; ++m) {
        a[m] = Q(1, static_cast<unsigned long>(m + 1));
        for (std::size_t j = m; j >= 1; --j)
            a[j - 1] = static_cast<long>(j) * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    return out;
}

/// Euler numbers as n! times the coefficients of 1/cosh x.
inline std::vector<Z> euler_from_sech(std::size_t n_max)
{
    std::vector<Q> cosh(n_max + 1), sech(n_max + 1);
    Z fact = 1;
    for (std::size_t i = 0; i <= n_max; ++i) {
        if (i > 0)
            fact *= static_cast<unsigned long>(i);
        cosh[i] = i % 2 == 0 ? Q(1) / Q(fact) : Q(0);
    }
    sech[0] = 1;
    for (std::size_t k = 1; k <= n_max; ++k) {
        Q acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            acc += cosh[j] * sech[k - j];
        sech[k] = -acc;
    }
    std::vector<Z> out;
    fact = 1;
    for (std::size_t i = 0; i <= n_max; ++i) {
        if (i > 0)
            fact *= static_cast<unsigned long>(i);
        Q e = sech[i] * fact;
        out.push_back(e.get_num());
    }
    return out;
}

inline long vp_int(Z x, long p)
{
    long v = 0;
    while (x != 0 && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline long vp(const Q& x, long p)
{
    return vp_int(x.get_num(), p) - vp_int(x.get_den(), p);
}

inline Q random_rational(std::mt19937_64& rng, long span = 200)
{
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    Q r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

} // namespace ref
