#include "apery/eisenstein.hpp"

#include "doctest.h"
#include "support/reference.hpp"

using namespace apery;

TEST_SUITE("eisenstein")
{
    TEST_CASE("Bernoulli numbers match Akiyama-Tanigawa")
    {
        const auto want = ref::bernoulli_akiyama_tanigawa(60);
        for (unsigned n = 0; n <= 60; ++n)
            CHECK(bernoulli(n) == want[n]);
        CHECK(bernoulli(1) == make_rational(1, 2));
        CHECK(bernoulli(12) == make_rational(-691, 2730));
        for (unsigned m = 1; m < 40; ++m)
            CHECK(bernoulli(2 * m + 1) == 0);
    }

    TEST_CASE("Euler numbers match the sech series")
    {
        const auto want = ref::euler_from_sech(40);
        for (unsigned n = 0; n <= 40; n += 2)
            CHECK(euler_number(n) == want[n]);
        CHECK(euler_number(2) == -1);
        CHECK(euler_number(4) == 5);
        CHECK_THROWS(euler_number(3));
    }

    TEST_CASE("special values")
    {
        CHECK(zeta_neg(2) == make_rational(-1, 12));
        CHECK(zeta_neg(4) == make_rational(1, 120));
        CHECK(zeta_star(Prime(2), 2) == make_rational(1, 12));
        CHECK(zeta_star(Prime(3), 2) == make_rational(1, 6));
        CHECK(l_chi_neg(0) == make_rational(1, 2));
        CHECK(l_chi_neg(2) == make_rational(-1, 2));
    }

    TEST_CASE("divisor sums against brute force")
    {
        CharacterMod4 chi;
        for (long p : {2L, 3L, 5L}) {
            Prime prime(p);
            for (long n = 1; n <= 60; ++n)
                for (long w : {-5L, -3L, 1L, 3L}) {
                    CHECK(sigma_star(n, prime, w) ==
                          ref::divisor_sum(n, w, [&](long d) { return d % p == 0 ? 0 : 1; }));
                    CHECK(sigma(n, w) == ref::divisor_sum(n, w, [](long) { return 1; }));
                    CHECK(sigma_chi(n, w) == ref::divisor_sum(n, w, [&](long d) { return chi(d); }));
                }
        }
    }

    TEST_CASE("E*_2 at p = 2 starts 1/24, 1, 1, 4")
    {
        auto s = series_E_star(Prime(2), 2, 4);
        CHECK(s == QSeries({make_rational(1, 24), Rational(1), Rational(1), Rational(4)}));
    }

    TEST_CASE("level lowering")
    {
        for (long p : {2L, 3L, 5L})
            for (unsigned two_k : {2u, 4u, 6u})
                for (std::size_t prec : {10u, 40u}) {
                    Prime prime(p);
                    auto e = series_E(two_k, prec);
                    auto lowered = e - e.substitute_power(static_cast<std::size_t>(p)) *
                                           Rational(ipow(Integer(p), two_k - 1));
                    CHECK(series_E_star(prime, two_k, prec) == lowered);
                }
    }

    TEST_CASE("evil twin is cuspidal and matches its definition")
    {
        for (long p : {2L, 3L})
            for (unsigned two_k : {2u, 4u, 6u, 8u}) {
                auto evil = series_evil(Prime(p), two_k, 30);
                CHECK(evil[0] == 0);
                auto e = series_E(two_k, 30);
                CHECK(evil == e - e.substitute_power(static_cast<std::size_t>(p)));
            }
        auto e4 = series_evil(Prime(2), 4, 3);
        CHECK(e4 == QSeries({Rational(0), Rational(1), Rational(8)}));
    }

    TEST_CASE("theta identity for the antiderivative")
    {
        for (long p : {2L, 3L})
            for (unsigned k = 1; k <= 3; ++k) {
                Prime prime(p);
                auto lhs = theta_power(series_E_prime(prime, 2 * k, 40), 2 * k + 1);
                CHECK(lhs == series_evil(prime, 2 * k + 2, 40));
            }
        auto ep = theta_inverse_power(series_evil(Prime(2), 4, 8), 3);
        CHECK(ep[3] == make_rational(28, 27));
        CHECK(ep == series_E_prime(Prime(2), 2, 8));
    }

    TEST_CASE("two forms of F agree")
    {
        for (unsigned w : {1u, 3u, 5u})
            for (std::size_t prec : {12u, 64u})
                CHECK(series_F(w, prec) == series_F_lambert(w, prec));
        auto f1 = series_F(1, 6);
        CHECK(f1[0] == make_rational(1, 4));
        CHECK(f1[5] == 2);
    }

    TEST_CASE("F' coefficients")
    {
        CharacterMod4 chi;
        auto fp = series_F_prime(30);
        CHECK(fp[0] == 0);
        for (long n = 1; n < 30; ++n)
            CHECK(fp[static_cast<std::size_t>(n)] == ref::divisor_sum(n, -2, [&](long d) { return chi(d); }));
    }
}
