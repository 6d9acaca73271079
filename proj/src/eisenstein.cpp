#include "apery/eisenstein.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace apery {

namespace {

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Even-index tables, grown on demand. B_m for the B_1 = -1/2 convention is
// stored; the odd entries beyond index 1 are zero and never stored.
class BernoulliTable {
public:
    Rational even(unsigned m)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        while (values_.size() <= m / 2)
            extend();
        return values_[m / 2];
    }

private:
    void extend()
    {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0, with only B_0, B_1 and even B_j nonzero.
        const unsigned m = 2 * static_cast<unsigned>(values_.size());
        if (m == 0) {
            values_.emplace_back(1);
            return;
        }
        Rational acc = Rational(binomial(m + 1, 1)) * Rational(-1, 2);
        for (unsigned j = 0; j < m; j += 2)
            acc += Rational(binomial(m + 1, j)) * values_[j / 2];
        Rational b = -acc / Rational(m + 1);
        values_.push_back(b);
    }

    std::mutex mutex_;
    std::vector<Rational> values_;
};

class EulerTable {
public:
    Integer even(unsigned m)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        while (values_.size() <= m / 2)
            extend();
        return values_[m / 2];
    }

private:
    void extend()
    {
        // cosh * sech = 1: sum_{j} C(m, 2j) E_{2j} = 0 for m >= 2.
        const unsigned m = 2 * static_cast<unsigned>(values_.size());
        if (m == 0) {
            values_.emplace_back(1);
            return;
        }
        Integer acc = 0;
        for (unsigned j = 0; j < m; j += 2)
            acc += binomial(m, j) * values_[j / 2];
        values_.push_back(-acc);
    }

    std::mutex mutex_;
    std::vector<Integer> values_;
};

BernoulliTable& bernoulli_table()
{
    static BernoulliTable table;
    return table;
}

EulerTable& euler_table()
{
    static EulerTable table;
    return table;
}

template <typename Pred>
Rational divisor_power_sum(long n, long w, Pred&& weight)
{
    if (n < 1)
        throw std::invalid_argument("divisor sum: n must be >= 1");
    Rational acc = 0;
    auto term = [&](long d) {
        long c = weight(d);
        if (c != 0)
            acc += c * rpow(Rational(d), w);
    };
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        term(d);
        if (d != n / d)
            term(n / d);
    }
    return acc;
}

void require_even_weight(unsigned two_k)
{
    if (two_k < 2 || two_k % 2 != 0)
        throw std::invalid_argument("weight must be an even integer >= 2");
}

} // namespace

Rational bernoulli(unsigned n)
{
    if (n == 1)
        return Rational(1, 2);
    if (n % 2 == 1)
        return 0;
    return bernoulli_table().even(n);
}

Integer euler_number(unsigned n)
{
    if (n % 2 != 0)
        throw std::invalid_argument("euler_number: odd index");
    return euler_table().even(n);
}

Rational zeta_neg(unsigned two_k)
{
    require_even_weight(two_k);
    return -bernoulli(two_k) / Rational(two_k);
}

Rational zeta_star(const Prime& p, unsigned two_k)
{
    require_even_weight(two_k);
    Integer pk = ipow(Integer(p.value()), two_k - 1);
    return Rational(1 - pk) * zeta_neg(two_k);
}

Rational l_chi_neg(unsigned two_k)
{
    return Rational(euler_number(two_k)) / 2;
}

Rational sigma_star(long n, const Prime& p, long w)
{
    return divisor_power_sum(n, w, [&](long d) { return d % p.value() == 0 ? 0L : 1L; });
}

Rational sigma(long n, long w)
{
    return divisor_power_sum(n, w, [](long) { return 1L; });
}

Rational sigma_chi(long n, long w)
{
    CharacterMod4 chi;
    return divisor_power_sum(n, w, [&](long d) { return static_cast<long>(chi(d)); });
}

QSeries series_E(unsigned two_k, std::size_t prec)
{
    require_even_weight(two_k);
    QSeries s(prec);
    s[0] = zeta_neg(two_k) / 2;
    for (std::size_t n = 1; n < prec; ++n)
        s[n] = sigma(static_cast<long>(n), static_cast<long>(two_k) - 1);
    return s;
}

QSeries series_E_star(const Prime& p, unsigned two_k, std::size_t prec)
{
    require_even_weight(two_k);
    QSeries s(prec);
    s[0] = zeta_star(p, two_k) / 2;
    for (std::size_t n = 1; n < prec; ++n)
        s[n] = sigma_star(static_cast<long>(n), p, static_cast<long>(two_k) - 1);
    return s;
}

QSeries series_evil(const Prime& p, unsigned two_k, std::size_t prec)
{
    QSeries e = series_E(two_k, prec);
    return e - e.substitute_power(static_cast<std::size_t>(p.value()));
}

QSeries series_E_prime(const Prime& p, unsigned two_k, std::size_t prec)
{
    require_even_weight(two_k);
    QSeries s(prec);
    for (std::size_t n = 1; n < prec; ++n)
        s[n] = sigma_star(static_cast<long>(n), p, -(static_cast<long>(two_k) + 1));
    return s;
}

QSeries series_F(unsigned odd_weight, std::size_t prec)
{
    if (odd_weight % 2 != 1)
        throw std::invalid_argument("series_F: weight must be odd and positive");
    const unsigned two_k = odd_weight - 1;
    QSeries s(prec);
    s[0] = l_chi_neg(two_k) / 2;
    for (std::size_t n = 1; n < prec; ++n)
        s[n] = sigma_chi(static_cast<long>(n), static_cast<long>(two_k));
    return s;
}

QSeries series_F_lambert(unsigned odd_weight, std::size_t prec)
{
    if (odd_weight % 2 != 1)
        throw std::invalid_argument("series_F_lambert: weight must be odd and positive");
    const unsigned two_k = odd_weight - 1;
    QSeries s(prec);
    s[0] = l_chi_neg(two_k) / 2;
    // q^m / (1 - q^m) = q^m + q^{2m} + ...
    for (std::size_t n = 0; 2 * n + 1 < prec; ++n) {
        const std::size_t m = 2 * n + 1;
        Integer c = ipow(Integer(static_cast<unsigned long>(m)), two_k);
        if (n % 2 == 1)
            c = -c;
        for (std::size_t j = m; j < prec; j += m)
            s[j] += c;
    }
    return s;
}

QSeries series_F_prime(std::size_t prec)
{
    QSeries s(prec);
    for (std::size_t n = 1; n < prec; ++n)
        s[n] = sigma_chi(static_cast<long>(n), -2);
    return s;
}

} // namespace apery
