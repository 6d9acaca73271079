#include "apery/exactnum.hpp"

#include "doctest.h"
#include "support/reference.hpp"

#include <cmath>
#include <random>

using namespace apery;

TEST_SUITE("exactnum")
{
    TEST_CASE("rationals are stored reduced")
    {
        Rational r = make_rational(6, -8);
        CHECK(r.get_num() == -3);
        CHECK(r.get_den() == 4);
        Rational z = make_rational(0, 17);
        CHECK(z.get_num() == 0);
        CHECK(z.get_den() == 1);
        CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    }

    TEST_CASE("primes are validated")
    {
        CHECK_NOTHROW(Prime(2));
        CHECK_NOTHROW(Prime(13));
        CHECK_THROWS_AS(Prime(1), std::invalid_argument);
        CHECK_THROWS_AS(Prime(12), std::invalid_argument);
    }

    TEST_CASE("vp examples")
    {
        CHECK(vp(Rational(0), Prime(2)).is_infinite());
        CHECK(vp(make_rational(1, 12), Prime(2)) == Valuation::finite(-2));
        CHECK(vp(make_rational(783269, 13060350), Prime(2)) == Valuation::finite(-1));
        CHECK(vp(make_rational(-8072, 27), Prime(3)) == Valuation::finite(-3));
        CHECK(Valuation::finite(3) < Valuation::infinity());
    }

    TEST_CASE("vp is a valuation on random rationals")
    {
        std::mt19937_64 rng(7);
        for (long p : {2L, 3L, 5L}) {
            Prime prime(p);
            for (int i = 0; i < 300; ++i) {
                Rational x = ref::random_rational(rng);
                Rational y = ref::random_rational(rng);
                if (x == 0 || y == 0)
                    continue;
                const long vx = vp(x, prime).value();
                const long vy = vp(y, prime).value();
                CHECK(vx == ref::vp(x, p));
                CHECK(vp(Rational(x * y), prime).value() == vx + vy);
                auto vs = vp(Rational(x + y), prime);
                if (vx != vy)
                    CHECK(vs.value() == std::min(vx, vy));
                else
                    CHECK(vs >= Valuation::finite(vx));
            }
        }
    }

    TEST_CASE("padic digits of small values")
    {
        CHECK(padic_digits(Rational(1), Prime(2), 1) == std::vector<PadicDigit>{{0, 1}});
        CHECK(padic_digits(Rational(0), Prime(2), 5).empty());
        CHECK(padic_digits(make_rational(1, 3), Prime(2), 3) == std::vector<PadicDigit>{{0, 1}, {1, 1}, {3, 1}});
        // 1/3 = 1 + 2 + 2^3 + 2^5 + ...: multiply back mod 2^6.
        Rational partial = 1 + 2 + 8 + 32;
        Integer check = (3 * partial.get_num()) % 64;
        CHECK(check == 1);
    }

    TEST_CASE("padic digits of the Catalan approximant")
    {
        auto digits = padic_digits(make_rational(783269, 13060350), Prime(2), 10);
        std::vector<long> exps;
        for (auto& d : digits)
            exps.push_back(d.exponent);
        CHECK(exps == std::vector<long>{-1, 0, 2, 3, 5, 6, 7, 9, 13, 18});
    }

    TEST_CASE("padic digits round trip")
    {
        std::mt19937_64 rng(11);
        for (long p : {2L, 3L, 7L}) {
            Prime prime(p);
            for (int i = 0; i < 100; ++i) {
                Rational x = ref::random_rational(rng, 1000);
                if (x == 0)
                    continue;
                auto digits = padic_digits(x, prime, 12);
                REQUIRE(!digits.empty());
                for (std::size_t j = 1; j < digits.size(); ++j)
                    CHECK(digits[j].exponent > digits[j - 1].exponent);
                for (auto& d : digits)
                    CHECK((d.digit >= 1 && d.digit < p));
                Rational r = from_padic_digits(digits, prime);
                CHECK(digits.front().exponent == vp(x, prime).value());
                CHECK(vp(Rational(x - r), prime) > Valuation::finite(digits.back().exponent));
            }
        }
    }

    TEST_CASE("lcm_upto")
    {
        CHECK(lcm_upto(1) == 1);
        CHECK(lcm_upto(5) == 60);
        // 2^3 * 3^2 * 5 * 7
        CHECK(lcm_upto(10) == 8 * 9 * 5 * 7);
        CHECK_THROWS_AS(lcm_upto(0), std::invalid_argument);
        for (long n = 1; n <= 40; ++n) {
            Integer l = lcm_upto(n);
            for (long m = 1; m <= n; ++m)
                CHECK(l % m == 0);
            for (long p : {2L, 3L, 5L, 7L, 11L}) {
                long pk = p;
                while (pk <= n)
                    pk *= p;
                CHECK(l % pk != 0);
            }
        }
    }

    TEST_CASE("log_size")
    {
        CHECK(log_size(Rational(1)) == doctest::Approx(0.0));
        CHECK(log_size(Rational(1024)) == doctest::Approx(10 * std::log(2.0)).epsilon(1e-13));
        CHECK(log_size(make_rational(-8072, 27)) == doctest::Approx(std::log(8072.0)).epsilon(1e-13));
        CHECK(log_size(make_rational(3, 1000)) == doctest::Approx(std::log(1000.0)).epsilon(1e-13));
        Rational huge = Rational(ipow(Integer(10), 400)) + 1;
        CHECK(log_size(huge) == doctest::Approx(400 * std::log(10.0)).epsilon(1e-13));
        CHECK_THROWS_AS(log_size(Rational(0)), std::invalid_argument);
    }
}
