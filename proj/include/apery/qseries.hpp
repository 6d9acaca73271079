#pragma once

#include "apery/exactnum.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace apery {

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Truncated power series sum_{i < prec} c_i q^i with exact rational
/// coefficients. Binary operations narrow to the smaller precision.
class QSeries {
public:
    explicit QSeries(std::size_t prec);
    explicit QSeries(std::vector<Rational> coeffs);

    static QSeries constant(const Rational& c, std::size_t prec);
    static QSeries monomial(const Rational& c, std::size_t power, std::size_t prec);

    std::size_t prec() const noexcept { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    QSeries truncate(std::size_t prec) const;

    /// q -> q^m.
    QSeries substitute_power(std::size_t m) const;

    /// Multiply by q^{-shift}; the dropped low coefficients must be zero.
    QSeries shift_down(std::size_t shift) const;

    bool all_integral() const;
    bool is_zero() const;

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    QSeries& operator*=(const Rational& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Rational& c);

/// Multiplicative inverse; throws NotInvertible on a zero constant term.
QSeries invert(const QSeries& a);

/// a^e for e >= 0.
QSeries power(const QSeries& a, unsigned e);

/// q d/dq.
QSeries theta(const QSeries& a);

/// theta^m.
QSeries theta_power(const QSeries& a, unsigned m);

/// Formal theta^{-m}: coefficient n becomes c_n / n^m. Requires c_0 = 0.
QSeries theta_inverse_power(const QSeries& a, unsigned m);

/// q^{leading_power} * prod_f prod_{n>=1} (1 + sign q^{stride n})^{exponent}.
struct ProductRecipe {
    struct Factor {
        int sign;            // +1 or -1
        std::size_t stride;  // >= 1
        long exponent;
    };

    std::size_t leading_power = 0;
    std::vector<Factor> factors;
};

QSeries expand_product(const ProductRecipe& recipe, std::size_t prec);

} // namespace apery
