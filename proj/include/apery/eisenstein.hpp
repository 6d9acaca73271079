#pragma once

#include "apery/exactnum.hpp"
#include "apery/qseries.hpp"

#include <cstddef>

namespace apery {

/// The odd Dirichlet character of conductor 4.
struct CharacterMod4 {
    int operator()(long n) const noexcept
    {
        if (n % 2 == 0)
            return 0;
        long r = ((n % 4) + 4) % 4;
        return r == 1 ? 1 : -1;
    }
};

/// B_n normalized by x/2 + x/(e^x - 1) = sum B_n x^n / n!, so B_1 = +1/2.
/// Values are cached process-wide; safe to call concurrently.
Rational bernoulli(unsigned n);

/// Euler numbers from sech x = sum E_n x^n / n! (E_0 = 1, E_2 = -1, E_4 = 5).
/// Only even indices are accepted.
Integer euler_number(unsigned n);

/// zeta(1 - 2k) = -B_{2k} / 2k for 2k >= 2 even.
Rational zeta_neg(unsigned two_k);

/// (1 - p^{2k-1}) zeta(1 - 2k).
Rational zeta_star(const Prime& p, unsigned two_k);

/// L(-2k, chi) = E_{2k} / 2.
Rational l_chi_neg(unsigned two_k);

/// sum_{d | n, gcd(d, p) = 1} d^w.
Rational sigma_star(long n, const Prime& p, long w);

/// sum_{d | n} d^w (no restriction).
Rational sigma(long n, long w);

/// sum_{d | n} chi(d) d^w.
Rational sigma_chi(long n, long w);

// q-expansions. Weights are passed as 2k (even) or 2k+1 (odd) exactly as
// they appear in the form's name.

/// E_{2k} = zeta(1-2k)/2 + sum sigma_{2k-1}(n) q^n.
QSeries series_E(unsigned two_k, std::size_t prec);

/// E*_{2k} = zeta*_p(1-2k)/2 + sum sigma*_{2k-1}(n) q^n.
QSeries series_E_star(const Prime& p, unsigned two_k, std::size_t prec);

/// E_{2k}(tau) - E_{2k}(p tau); cuspidal at infinity.
QSeries series_evil(const Prime& p, unsigned two_k, std::size_t prec);

/// E'_{-2k}: coefficient sigma*(n, p, -(2k+1)), constant 0.
QSeries series_E_prime(const Prime& p, unsigned two_k, std::size_t prec);

/// F_{2k+1} = L(-2k, chi)/2 + sum (sum_{d|n} chi(d) d^{2k}) q^n.
QSeries series_F(unsigned odd_weight, std::size_t prec);

/// F_{2k+1} built from the Lambert form
/// L(-2k,chi)/2 + sum_n (-1)^n (2n+1)^{2k} q^{2n+1} / (1 - q^{2n+1}).
QSeries series_F_lambert(unsigned odd_weight, std::size_t prec);

/// F'_{-1}: coefficient sigma_chi(n, -2), constant 0.
QSeries series_F_prime(std::size_t prec);

} // namespace apery
