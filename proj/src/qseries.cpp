#include "apery/qseries.hpp"

#include <algorithm>

namespace apery {

QSeries::QSeries(std::size_t prec) : coeffs_(prec)
{
    if (prec == 0)
        throw std::invalid_argument("QSeries: precision must be positive");
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("QSeries: precision must be positive");
}

QSeries QSeries::constant(const Rational& c, std::size_t prec)
{
    QSeries s(prec);
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::monomial(const Rational& c, std::size_t power, std::size_t prec)
{
    QSeries s(prec);
    if (power < prec)
        s.coeffs_[power] = c;
    return s;
}

QSeries QSeries::truncate(std::size_t prec) const
{
    if (prec == 0 || prec > this->prec())
        throw std::invalid_argument("QSeries::truncate: precision out of range");
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(prec)));
}

QSeries QSeries::substitute_power(std::size_t m) const
{
    if (m == 0)
        throw std::invalid_argument("substitute_power: m must be positive");
    QSeries out(prec());
    for (std::size_t i = 0; i * m < prec(); ++i)
        out.coeffs_[i * m] = coeffs_[i];
    return out;
}

QSeries QSeries::shift_down(std::size_t shift) const
{
    if (shift >= prec())
        throw std::invalid_argument("shift_down: shift exceeds precision");
    for (std::size_t i = 0; i < shift; ++i)
        if (coeffs_[i] != 0)
            throw std::invalid_argument("shift_down: nonzero coefficient below shift");
    return QSeries(std::vector<Rational>(coeffs_.begin() + static_cast<long>(shift), coeffs_.end()));
}

bool QSeries::all_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

QSeries& QSeries::operator+=(const QSeries& rhs)
{
    coeffs_.resize(std::min(prec(), rhs.prec()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs)
{
    coeffs_.resize(std::min(prec(), rhs.prec()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    const std::size_t n = std::min(a.prec(), b.prec());
    QSeries out(n);
    // Skip zero coefficients; products of sparse eta factors dominate.
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coeffs_[j] == 0)
                continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

QSeries add(const QSeries& a, const QSeries& b) { return a + b; }
QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }
QSeries scale(const QSeries& a, const Rational& c) { return a * c; }

QSeries invert(const QSeries& a)
{
    if (a[0] == 0)
        throw NotInvertible("invert: zero constant term");
    const std::size_t n = a.prec();
    QSeries out(n);
    const Rational inv0 = 1 / a[0];
    out[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            if (a[j] != 0)
                acc += a[j] * out[k - j];
        out[k] = -acc * inv0;
    }
    return out;
}

QSeries power(const QSeries& a, unsigned e)
{
    QSeries result = QSeries::constant(1, a.prec());
    QSeries base = a;
    while (e > 0) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e > 0)
            base = base * base;
    }
    return result;
}

QSeries theta(const QSeries& a)
{
    QSeries out(a.prec());
    for (std::size_t i = 1; i < a.prec(); ++i)
        out[i] = a[i] * static_cast<unsigned long>(i);
    return out;
}

QSeries theta_power(const QSeries& a, unsigned m)
{
    QSeries out(a.prec());
    for (std::size_t i = 1; i < a.prec(); ++i)
        out[i] = a[i] * ipow(Integer(static_cast<unsigned long>(i)), m);
    return out;
}

QSeries theta_inverse_power(const QSeries& a, unsigned m)
{
    if (a[0] != 0)
        throw std::invalid_argument("theta_inverse_power: nonzero constant term");
    QSeries out(a.prec());
    for (std::size_t i = 1; i < a.prec(); ++i)
        out[i] = a[i] / Rational(ipow(Integer(static_cast<unsigned long>(i)), m));
    return out;
}

namespace {

// Coefficients of (1 + sign*x)^e as a power series in x, through x^terms.
std::vector<Integer> binomial_series(int sign, long e, std::size_t terms)
{
    std::vector<Integer> c(terms + 1);
    c[0] = 1;
    // C(e, j) = C(e, j-1) * (e - j + 1) / j, valid for negative e too.
    for (std::size_t j = 1; j <= terms; ++j) {
        c[j] = c[j - 1] * (e - static_cast<long>(j) + 1);
        mpz_divexact_ui(c[j].get_mpz_t(), c[j].get_mpz_t(), static_cast<unsigned long>(j));
    }
    if (sign < 0)
        for (std::size_t j = 1; j <= terms; j += 2)
            c[j] = -c[j];
    return c;
}

} // namespace

QSeries expand_product(const ProductRecipe& recipe, std::size_t prec)
{
    if (prec == 0)
        throw std::invalid_argument("expand_product: precision must be positive");
    // Accumulate the unit part with integer arithmetic, then shift.
    std::vector<Integer> acc(prec);
    acc[0] = 1;
    for (const auto& f : recipe.factors) {
        if (f.sign != 1 && f.sign != -1)
            throw std::invalid_argument("expand_product: sign must be +1 or -1");
        if (f.stride == 0)
            throw std::invalid_argument("expand_product: stride must be positive");
        if (f.exponent == 0)
            continue;
        for (std::size_t n = 1; f.stride * n < prec; ++n) {
            const std::size_t step = f.stride * n;
            const std::size_t terms = (prec - 1) / step;
            const auto bin = binomial_series(f.sign, f.exponent, terms);
            for (std::size_t i = prec; i-- > 0;) {
                Integer sum = acc[i];
                for (std::size_t j = 1; j * step <= i; ++j)
                    sum += bin[j] * acc[i - j * step];
                acc[i] = sum;
            }
        }
    }
    QSeries out(prec);
    for (std::size_t i = 0; i + recipe.leading_power < prec; ++i)
        out[i + recipe.leading_power] = Rational(acc[i]);
    return out;
}

} // namespace apery
