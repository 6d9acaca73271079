#include "apery/exactnum.hpp"

#include <cmath>

namespace apery {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_prime(long n) noexcept
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Prime::Prime(long value) : value_(value)
{
    if (!is_prime(value))
        throw std::invalid_argument("not a prime: " + std::to_string(value));
}

long Valuation::value() const
{
    if (!value_)
        throw std::logic_error("Valuation::value on INFINITY");
    return *value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept
{
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
}

std::string Valuation::str() const
{
    return value_ ? std::to_string(*value_) : std::string("INFINITY");
}

long vp(const Integer& x, const Prime& p)
{
    if (x == 0)
        throw std::invalid_argument("vp: zero integer");
    Integer prime(p.value());
    Integer stripped;
    return static_cast<long>(mpz_remove(stripped.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

Valuation vp(const Rational& x, const Prime& p)
{
    if (x == 0)
        return Valuation::infinity();
    return Valuation::finite(vp(x.get_num(), p) - vp(x.get_den(), p));
}

Valuation vp_diff(const Rational& x, const Rational& y, const Prime& p)
{
    return vp(Rational(x - y), p);
}

std::vector<PadicDigit> padic_digits(const Rational& x, const Prime& p, std::size_t count)
{
    std::vector<PadicDigit> out;
    if (x == 0)
        return out;

    const Integer prime(p.value());
    long exponent = vp(x, p).value();
    // x = p^exponent * u with u a p-adic unit; peel digits of u one at a time.
    Rational u = x * rpow(Rational(p.value()), -exponent);
    while (out.size() < count) {
        if (u == 0)
            break;
        // digit = num * den^{-1} mod p
        Integer den_inv;
        Integer den_mod = u.get_den() % prime;
        mpz_invert(den_inv.get_mpz_t(), den_mod.get_mpz_t(), prime.get_mpz_t());
        Integer digit = (u.get_num() * den_inv) % prime;
        if (digit < 0)
            digit += prime;
        if (digit != 0) {
            out.push_back({exponent, digit.get_si()});
            u -= digit;
        }
        u /= prime;
        ++exponent;
    }
    return out;
}

Rational from_padic_digits(const std::vector<PadicDigit>& digits, const Prime& p)
{
    Rational sum = 0;
    for (const auto& d : digits)
        sum += d.digit * rpow(Rational(p.value()), d.exponent);
    return sum;
}

Integer lcm_upto(long n)
{
    if (n < 1)
        throw std::invalid_argument("lcm_upto: n must be >= 1");
    Integer acc = 1;
    for (long m = 2; m <= n; ++m)
        mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
    return acc;
}

double log_abs(const Integer& x)
{
    if (x == 0)
        throw std::invalid_argument("log_abs: zero");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double log_size(const Rational& x)
{
    if (x == 0)
        throw std::invalid_argument("log_size: zero");
    Integer num = abs(x.get_num());
    const Integer& den = x.get_den();
    return log_abs(num > den ? num : den);
}

Integer ipow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& base, long e)
{
    if (e >= 0) {
        auto ue = static_cast<unsigned long>(e);
        return make_rational(ipow(base.get_num(), ue), ipow(base.get_den(), ue));
    }
    if (base == 0)
        throw std::domain_error("rpow: zero to a negative power");
    auto ue = static_cast<unsigned long>(-e);
    return make_rational(ipow(base.get_den(), ue), ipow(base.get_num(), ue));
}

} // namespace apery
