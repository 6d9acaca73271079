#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apery {

using Integer = mpz_class;
// gmpxx keeps arithmetic results canonical (reduced, positive denominator);
// construct through make_rational() when starting from a raw pair.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// A rational prime, checked on construction.
class Prime {
public:
    explicit Prime(long value);

    long value() const noexcept { return value_; }
    operator long() const noexcept { return value_; }

private:
    long value_;
};

bool is_prime(long n) noexcept;

/// p-adic valuation of a rational; infinite exactly for zero.
class Valuation {
public:
    static Valuation infinity() noexcept { return Valuation(); }
    static Valuation finite(long v) noexcept { return Valuation(v); }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    bool is_finite() const noexcept { return value_.has_value(); }

    /// Throws std::logic_error on INFINITY.
    long value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept;

    std::string str() const;

private:
    Valuation() = default;
    explicit Valuation(long v) : value_(v) {}

    std::optional<long> value_;
};

/// Exponent of p in a nonzero integer. Requires x != 0.
long vp(const Integer& x, const Prime& p);
Valuation vp(const Rational& x, const Prime& p);

/// Convenience: valuation of a difference, the standard "agreement order".
Valuation vp_diff(const Rational& x, const Rational& y, const Prime& p);

struct PadicDigit {
    long exponent;
    long digit;

    friend bool operator==(const PadicDigit&, const PadicDigit&) = default;
};

/// First `count` nonzero digits of the canonical p-adic expansion of x,
/// lowest exponent first. Empty for x = 0.
std::vector<PadicDigit> padic_digits(const Rational& x, const Prime& p, std::size_t count);

/// Sum of digit * p^exponent over the given digits.
Rational from_padic_digits(const std::vector<PadicDigit>& digits, const Prime& p);

/// Least common multiple of 1..n.
Integer lcm_upto(long n);

/// Natural log of max(|numerator|, denominator). Throws on zero.
double log_size(const Rational& x);

/// Natural log of |x| for a nonzero integer, accurate well past 12 digits.
double log_abs(const Integer& x);

Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, long e);

} // namespace apery
