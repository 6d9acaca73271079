#include "apery/qseries.hpp"

#include "doctest.h"
#include "support/reference.hpp"

#include <random>

using namespace apery;

namespace {

QSeries from_ints(std::initializer_list<long> xs)
{
    std::vector<Rational> c;
    for (long x : xs)
        c.emplace_back(x);
    return QSeries(std::move(c));
}

QSeries random_series(std::mt19937_64& rng, std::size_t prec)
{
    std::vector<Rational> c;
    for (std::size_t i = 0; i < prec; ++i)
        c.push_back(ref::random_rational(rng, 30));
    return QSeries(std::move(c));
}

} // namespace

TEST_SUITE("qseries")
{
    TEST_CASE("small products")
    {
        CHECK(mul(from_ints({1, 1, 0}), from_ints({1, -1, 0})) == from_ints({1, 0, -1}));
        CHECK(mul(from_ints({0, 1, 0}), from_ints({0, 1, 0})) == from_ints({0, 0, 1}));
        auto x = from_ints({3, -2, 7, 5});
        CHECK(mul(x, QSeries::constant(1, 4)) == x);
        CHECK(mul(from_ints({1, 2, 3, 4}), from_ints({1, 1})).prec() == 2);
        CHECK(add(from_ints({1, 2, 3}), from_ints({1, 1})) == from_ints({2, 3}));
        CHECK(scale(from_ints({1, 2}), make_rational(1, 2)) == QSeries({make_rational(1, 2), Rational(1)}));
    }

    TEST_CASE("invert")
    {
        CHECK(invert(from_ints({1, -1, 0, 0})) == from_ints({1, 1, 1, 1}));
        CHECK(invert(QSeries::constant(1, 3)) == QSeries::constant(1, 3));
        CHECK(invert(QSeries::constant(2, 1)) == QSeries::constant(make_rational(1, 2), 1));
        CHECK_THROWS_AS(invert(from_ints({0, 1, 2})), NotInvertible);

        std::mt19937_64 rng(3);
        for (int i = 0; i < 30; ++i) {
            auto a = random_series(rng, 9);
            if (a[0] == 0)
                a[0] = 1;
            CHECK(mul(a, invert(a)) == QSeries::constant(1, 9));
        }
    }

    TEST_CASE("ring laws on random instances")
    {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 40; ++i) {
            auto a = random_series(rng, 7);
            auto b = random_series(rng, 7);
            auto c = random_series(rng, 6);
            CHECK(mul(a, b) == mul(b, a));
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
            CHECK(add(a, b) == add(b, a));
            CHECK((a - a).is_zero());
        }
    }

    TEST_CASE("power")
    {
        auto x = from_ints({1, 1, 0, 0, 0, 0});
        CHECK(power(x, 0) == QSeries::constant(1, 6));
        CHECK(power(x, 5) == from_ints({1, 5, 10, 10, 5, 1}));
    }

    TEST_CASE("theta and its formal inverse")
    {
        CHECK(theta(QSeries::constant(1, 4)).is_zero());
        CHECK(theta(from_ints({0, 1, 1})) == from_ints({0, 1, 2}));
        CHECK(theta_inverse_power(from_ints({0, 1, 0}), 3) == from_ints({0, 1, 0}));
        CHECK(theta_inverse_power(from_ints({0, 0, 2}), 1) == from_ints({0, 0, 1}));
        CHECK_THROWS_AS(theta_inverse_power(from_ints({1, 1}), 1), std::invalid_argument);

        std::mt19937_64 rng(9);
        for (int i = 0; i < 20; ++i) {
            auto a = random_series(rng, 10);
            a[0] = 0;
            CHECK(theta(theta_inverse_power(a, 1)) == a);
            CHECK(theta_power(theta_inverse_power(a, 3), 3) == a);
        }
    }

    TEST_CASE("substitute and shift")
    {
        auto x = from_ints({1, 2, 3, 4, 5});
        CHECK(x.substitute_power(2) == from_ints({1, 0, 2, 0, 3}));
        CHECK(from_ints({0, 0, 3, 4}).shift_down(2) == from_ints({3, 4}));
        CHECK_THROWS(from_ints({0, 1, 3, 4}).shift_down(2));
    }

    TEST_CASE("product recipes")
    {
        ProductRecipe bare{1, {{1, 1, 0}}};
        CHECK(expand_product(bare, 4) == from_ints({0, 1, 0, 0}));

        ProductRecipe f2{1, {{1, 1, 24}}};
        auto f = expand_product(f2, 3);
        CHECK(f[1] == 1);
        CHECK(f[2] == 24);

        ProductRecipe delta{1, {{-1, 1, 24}}};
        CHECK(expand_product(delta, 3)[2] == -24);
    }

    TEST_CASE("product recipes agree with repeated multiplication")
    {
        const std::size_t prec = 24;
        for (int sign : {1, -1})
            for (std::size_t stride : {1u, 2u, 3u})
                for (unsigned e : {1u, 3u, 8u}) {
                    ProductRecipe r{2, {{sign, stride, static_cast<long>(e)}}};
                    auto got = expand_product(r, prec);
                    auto want = ref::naive_product(2, sign, stride, e, prec);
                    for (std::size_t i = 0; i < prec; ++i)
                        CHECK(got[i] == Rational(want[i]));
                }
    }

    TEST_CASE("negative exponents invert the positive product")
    {
        ProductRecipe pos{0, {{-1, 1, 5}, {1, 2, 3}}};
        ProductRecipe neg{0, {{-1, 1, -5}, {1, 2, -3}}};
        CHECK(mul(expand_product(pos, 30), expand_product(neg, 30)) == QSeries::constant(1, 30));
    }

    TEST_CASE("truncation coherence")
    {
        ProductRecipe r{1, {{1, 1, 8}, {1, 2, 8}}};
        auto big = expand_product(r, 40);
        for (std::size_t n : {1u, 2u, 7u, 20u})
            CHECK(big.truncate(n) == expand_product(r, n));
    }

    TEST_CASE("eta quotient for Delta(2 tau)/Delta(tau)")
    {
        for (std::size_t prec : {8u, 32u, 64u}) {
            ProductRecipe num{2, {{-1, 2, 24}}};
            ProductRecipe den{1, {{-1, 1, 24}}};
            auto numerator = expand_product(num, prec + 1).shift_down(1);
            auto denominator = expand_product(den, prec + 1).shift_down(1);
            auto ratio = mul(numerator, invert(denominator));
            CHECK(ratio == expand_product(ProductRecipe{1, {{1, 1, 24}}}, prec));
        }
    }
}
