#include "apery/curves.hpp"

#include "apery/eisenstein.hpp"

namespace apery {

CaseId zeta_p2(unsigned k) { return {Family::ZetaP2, k}; }
CaseId zeta_p3(unsigned k) { return {Family::ZetaP3, k}; }
CaseId zeta_p5(unsigned k) { return {Family::ZetaP5, k}; }
CaseId catalan_p2() { return {Family::CatalanP2, 0}; }

std::string family_name(Family f)
{
    switch (f) {
    case Family::ZetaP2: return "zeta-p2";
    case Family::ZetaP3: return "zeta-p3";
    case Family::ZetaP5: return "zeta-p5";
    case Family::CatalanP2: return "catalan-p2";
    }
    throw std::invalid_argument("unknown family");
}

std::optional<Family> parse_family(const std::string& name)
{
    for (Family f : {Family::ZetaP2, Family::ZetaP3, Family::ZetaP5, Family::CatalanP2})
        if (family_name(f) == name)
            return f;
    return std::nullopt;
}

std::string case_label(const CaseId& id)
{
    if (id.family == Family::CatalanP2)
        return family_name(id.family);
    return family_name(id.family) + "(k=" + std::to_string(id.k) + ")";
}

namespace {

// Smallest scaling making the constant term c0 a positive integer; this is
// 1/c0 whenever c0 has numerator 1, which covers every weight-2 and weight-1 case.
Rational integral_normalizer(const Rational& c0)
{
    return Rational(abs(c0.get_num())) / c0;
}

ProductRecipe eta_quotient_root(long p)
{
    // (Delta(p tau)/Delta(tau))^{1/(p-1)} = q prod ((1 - q^{pn})/(1 - q^n))^{24/(p-1)}
    const long e = 24 / (p - 1);
    return {1, {{-1, static_cast<std::size_t>(p), e}, {-1, 1, -e}}};
}

CaseConfig zeta_case(const CaseId& id, long p, Rational v, Rational e)
{
    if (id.k < 1)
        throw std::invalid_argument("zeta case requires k >= 1");
    Prime prime(p);
    const unsigned two_k = 2 * id.k;
    CaseConfig cfg{
        id,
        prime,
        two_k,
        p == 2 ? ProductRecipe{1, {{1, 1, 24}}} : eta_quotient_root(p),
        integral_normalizer(zeta_star(prime, two_k) / 2),
        std::move(v),
        std::move(e),
        two_k + 1,
        1,
        1,
        {},
    };
    return cfg;
}

} // namespace

CaseConfig catalog(const CaseId& id)
{
    switch (id.family) {
    case Family::ZetaP2: {
        auto cfg = zeta_case(id, 2, 12, 6);
        cfg.notes = {
            "X_0(2): cusps i*infinity (f = 0) and 0 (f = infinity)",
            "elliptic point (1+i)/2 with f = -2^-6",
            "ordinary locus: |f|_2 <= 1 and |f|_2 >= 2^12",
            "Fricke involution sends 2^12 f to 1/f",
        };
        return cfg;
    }
    case Family::ZetaP3: {
        auto cfg = zeta_case(id, 3, 6, 3);
        cfg.notes = {
            "X_0(3): f has a zero at i*infinity and a pole at 0",
            "elliptic point 1/2 + sqrt(-3)/6 with f = -3^-3",
            "ordinary locus: |f|_3 <= 1 and |f|_3 >= 3^6",
        };
        return cfg;
    }
    case Family::ZetaP5: {
        auto cfg = zeta_case(id, 5, 3, Rational(3, 2));
        cfg.notes = {"X_0(5): genus zero; radii exponents v = 3, e = 3/2"};
        return cfg;
    }
    case Family::CatalanP2: {
        Prime two(2);
        CaseConfig cfg{
            catalan_p2(),
            two,
            0,
            ProductRecipe{1, {{1, 1, 8}, {1, 2, 8}}},
            integral_normalizer(l_chi_neg(0) / 2),
            8,
            4,
            2,
            1,
            -1,
            {
                "X_1(4): cusps i*infinity (z = 0), 1/2 (z = -2^-4), 0 (pole)",
                "no elliptic points",
                "Fricke involution sends 2^8 z to 1/z",
                "ordinary component containing infinity: |z|_2 <= 1",
            },
        };
        return cfg;
    }
    }
    throw std::invalid_argument("catalog: unknown case");
}

QSeries uniformizer_series(const CaseId& id, std::size_t prec)
{
    if (prec < 2)
        throw std::invalid_argument("uniformizer_series: prec must be >= 2");
    return expand_product(catalog(id).uniformizer, prec);
}

QSeries base_form(const CaseId& id, std::size_t prec)
{
    if (id.family == Family::CatalanP2)
        return series_F(1, prec);
    const auto cfg = catalog(id);
    return series_E_star(cfg.p, cfg.two_k, prec);
}

QSeries companion_form(const CaseId& id, std::size_t prec)
{
    if (id.family == Family::CatalanP2)
        return series_F_prime(prec);
    const auto cfg = catalog(id);
    return series_E_prime(cfg.p, cfg.two_k, prec);
}

namespace {

// The unique mu with lhs = mu * rhs, or nullopt.
std::optional<Rational> proportionality(const QSeries& lhs, const QSeries& rhs)
{
    const std::size_t n = std::min(lhs.prec(), rhs.prec());
    std::optional<Rational> mu;
    for (std::size_t i = 0; i < n; ++i) {
        if (rhs[i] == 0) {
            if (lhs[i] != 0)
                return std::nullopt;
            continue;
        }
        Rational r = lhs[i] / rhs[i];
        if (mu && *mu != r)
            return std::nullopt;
        mu = r;
    }
    return mu;
}

} // namespace

Rational check_logderivative(const CaseId& id, std::size_t prec)
{
    if (prec < 8)
        throw std::invalid_argument("check_logderivative: prec must be >= 8");
    // f = q g with g(0) = 1, so theta f / f = 1 + theta g / g.
    const QSeries g = uniformizer_series(id, prec + 1).shift_down(1);
    QSeries log_deriv = theta(g) * invert(g);
    log_deriv[0] += 1;

    // F_1 has weight 1, so on X_1(4) the weight-2 comparison form is its square.
    QSeries weight_two = id.family == Family::CatalanP2
        ? power(series_F(1, prec), 2)
        : series_E_star(catalog(id).p, 2, prec);
    auto mu = proportionality(log_deriv, weight_two);
    if (!mu)
        throw IdentityViolation("theta f / f is not a multiple of the weight-2 form for " + case_label(id));
    return *mu;
}

QSeries delta_series(std::size_t prec)
{
    return expand_product(ProductRecipe{1, {{-1, 1, 24}}}, prec);
}

QSeries delta_ratio_series(unsigned m, std::size_t prec)
{
    if (m < 1)
        throw std::invalid_argument("delta_ratio_series: m must be >= 1");
    QSeries num = expand_product(ProductRecipe{m - 1, {{-1, m, 24}}}, prec);
    QSeries den = expand_product(ProductRecipe{0, {{-1, 1, 24}}}, prec);
    return num * invert(den);
}

Rational check_elliptic_identity(std::size_t prec)
{
    if (prec < 16)
        throw std::invalid_argument("check_elliptic_identity: prec must be >= 16");
    Prime two(2);
    const QSeries f = uniformizer_series(zeta_p2(1), prec);
    // f / Delta = Delta(2 tau) / Delta(tau)^2, a unit power series.
    QSeries unit_delta = expand_product(ProductRecipe{0, {{-1, 1, 24}}}, prec);
    QSeries f_over_delta = expand_product(ProductRecipe{0, {{-1, 2, 24}}}, prec)
        * invert(unit_delta * unit_delta);

    QSeries lhs = power(series_E_star(two, 2, prec), 6) * f_over_delta;
    QSeries rhs = power(QSeries::constant(1, prec) + f * Rational(64), 3);

    auto mu6 = proportionality(rhs, lhs);
    if (!mu6 || *mu6 <= 0)
        throw IdentityViolation("E*_2^6 / Delta does not match (1 + 2^6 f)^3 / f");

    Integer num_root, den_root;
    const bool exact_num = mpz_root(num_root.get_mpz_t(), mu6->get_num_mpz_t(), 6) != 0;
    const bool exact_den = mpz_root(den_root.get_mpz_t(), mu6->get_den_mpz_t(), 6) != 0;
    if (!exact_num || !exact_den)
        throw IdentityViolation("elliptic identity scalar is not a rational sixth power");
    return make_rational(num_root, den_root);
}

} // namespace apery
