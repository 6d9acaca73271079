#include "apery/curves.hpp"
#include "apery/eisenstein.hpp"

#include "doctest.h"
#include "support/reference.hpp"

using namespace apery;

namespace {

const CaseId kAllCases[] = {zeta_p2(1), zeta_p2(2), zeta_p3(1), zeta_p5(1), catalan_p2()};

} // namespace

TEST_SUITE("curves")
{
    TEST_CASE("catalog constants")
    {
        auto z2 = catalog(zeta_p2(1));
        CHECK(z2.p == 2);
        CHECK(z2.v == 12);
        CHECK(z2.e == 6);
        CHECK(z2.D == 3);
        CHECK(z2.lambda == 24);

        auto z2k2 = catalog(zeta_p2(2));
        CHECK(z2k2.D == 5);
        CHECK(z2k2.two_k == 4);
        CHECK(z2k2.lambda == -240);

        auto z3 = catalog(zeta_p3(1));
        CHECK(z3.v == 6);
        CHECK(z3.e == 3);
        CHECK(z3.D == 3);
        CHECK(z3.lambda == 12);

        auto z5 = catalog(zeta_p5(1));
        CHECK(z5.v == 3);
        CHECK(z5.e == make_rational(3, 2));

        auto cat = catalog(catalan_p2());
        CHECK(cat.v == 8);
        CHECK(cat.e == 4);
        CHECK(cat.D == 2);
        CHECK(cat.lambda == 4);

        for (const auto& id : kAllCases) {
            auto cfg = catalog(id);
            CHECK(cfg.v > 0);
            CHECK(cfg.e > 0);
            CHECK(cfg.D >= 1);
            const Rational c0 = cfg.lambda * base_form(id, 1)[0];
            CHECK(c0 > 0);
            CHECK(c0.get_den() == 1);
            if (id.k == 1)
                CHECK(c0 == 1);
        }
    }

    TEST_CASE("case names round trip")
    {
        for (auto f : {Family::ZetaP2, Family::ZetaP3, Family::ZetaP5, Family::CatalanP2})
            CHECK(parse_family(family_name(f)) == f);
        CHECK_FALSE(parse_family("zeta-p7").has_value());
        CHECK(case_label(zeta_p2(1)) == "zeta-p2(k=1)");
        CHECK_THROWS_AS(catalog(zeta_p2(0)), std::invalid_argument);
    }

    TEST_CASE("uniformizers are q + O(q^2) with integer coefficients")
    {
        for (const auto& id : kAllCases) {
            auto f = uniformizer_series(id, 64);
            CHECK(f[0] == 0);
            CHECK(f[1] == 1);
            CHECK(f.all_integral());
        }
        CHECK(uniformizer_series(zeta_p2(1), 3)[2] == 24);
        CHECK(uniformizer_series(catalan_p2(), 3)[2] == 8);
        CHECK(uniformizer_series(zeta_p3(1), 4)[2] == 12);
    }

    TEST_CASE("p = 3 uniformizer squares to Delta(3 tau)/Delta(tau)")
    {
        const std::size_t prec = 40;
        auto f = uniformizer_series(zeta_p3(1), prec);
        auto num = ref::naive_product(2, -1, 3, 24, prec);
        auto den = ref::naive_product(0, -1, 1, 24, prec);
        std::vector<Rational> nc(num.begin(), num.end()), dc(den.begin(), den.end());
        CHECK(mul(f, f) == mul(QSeries(nc), invert(QSeries(dc))));
    }

    TEST_CASE("Catalan uniformizer is the cube root of Delta(4 tau)/Delta(tau)")
    {
        const std::size_t prec = 40;
        auto z = uniformizer_series(catalan_p2(), prec);
        auto num = ref::naive_product(3, -1, 4, 24, prec);
        auto den = ref::naive_product(0, -1, 1, 24, prec);
        std::vector<Rational> nc(num.begin(), num.end()), dc(den.begin(), den.end());
        CHECK(power(z, 3) == mul(QSeries(nc), invert(QSeries(dc))));
    }

    TEST_CASE("Delta(2 tau)/Delta(tau) equals the zeta-p2 uniformizer")
    {
        for (std::size_t prec : {16u, 64u}) {
            auto ratio = delta_ratio_series(2, prec);
            CHECK(ratio == uniformizer_series(zeta_p2(1), prec));
        }
        auto d = delta_series(4);
        CHECK(d == QSeries({Rational(0), Rational(1), Rational(-24), Rational(252)}));
    }

    TEST_CASE("logarithmic derivative canaries")
    {
        CHECK(check_logderivative(zeta_p2(1), 64) == 24);
        CHECK(check_logderivative(zeta_p3(1), 64) == 12);
        CHECK(check_logderivative(catalan_p2(), 64) == 16);
        CHECK(check_logderivative(zeta_p5(1), 32) == Rational(2) / zeta_star(Prime(5), 2));
    }

    TEST_CASE("elliptic identity canary")
    {
        CHECK(check_elliptic_identity(16) == 24);
        CHECK(check_elliptic_identity(32) == 24);
        CHECK(check_elliptic_identity(64) == 24);
        CHECK_THROWS(check_elliptic_identity(8));
    }

    TEST_CASE("companion forms")
    {
        CHECK(companion_form(zeta_p2(1), 10) == series_E_prime(Prime(2), 2, 10));
        CHECK(companion_form(catalan_p2(), 10) == series_F_prime(10));
        CHECK(base_form(catalan_p2(), 10) == series_F(1, 10));
        CHECK(base_form(zeta_p3(2), 10) == series_E_star(Prime(3), 4, 10));
    }
}
