#include "apery/recurrence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace apery {

Rational Polynomial::operator()(const Rational& n) const
{
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * n + *it;
    return acc;
}

long Polynomial::degree() const
{
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i] != 0)
            return static_cast<long>(i);
    return -1;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Rational x = i < a.coeffs.size() ? a.coeffs[i] : Rational(0);
        const Rational y = i < b.coeffs.size() ? b.coeffs[i] : Rational(0);
        if (x != y)
            return false;
    }
    return true;
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (long j = p.degree(); j >= 0; --j) {
        const Rational& c = p.coeffs[static_cast<std::size_t>(j)];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (!first)
            out << (c < 0 ? " - " : " + ");
        else if (c < 0)
            out << "-";
        first = false;
        if (j == 0 || mag != 1)
            out << to_string(mag);
        if (j > 0)
            out << (j == 0 || mag != 1 ? "*" : "") << "n" << (j > 1 ? "^" + std::to_string(j) : "");
    }
    return out.str();
}

RecurrenceSpec RecurrenceSpec::normalized() const
{
    if (polys.empty() || polys[0].is_zero())
        throw std::invalid_argument("recurrence: leading polynomial is zero");
    Integer den_lcm = 1;
    for (const auto& poly : polys)
        for (const auto& c : poly.coeffs)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& poly : polys)
        for (const auto& c : poly.coeffs) {
            Rational scaled = c * den_lcm;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_num_mpz_t());
        }
    Rational factor = make_rational(den_lcm, num_gcd);
    const auto lead = polys[0].coeffs[static_cast<std::size_t>(polys[0].degree())];
    if (lead < 0)
        factor = -factor;

    RecurrenceSpec out{order, degree, {}};
    for (const auto& poly : polys) {
        Polynomial scaled;
        scaled.coeffs.resize(degree + 1);
        for (std::size_t j = 0; j < poly.coeffs.size() && j <= degree; ++j)
            scaled.coeffs[j] = poly.coeffs[j] * factor;
        out.polys.push_back(std::move(scaled));
    }
    return out;
}

std::string to_string(const RecurrenceSpec& spec)
{
    std::ostringstream out;
    for (unsigned i = 0; i <= spec.order; ++i) {
        if (i > 0)
            out << " + ";
        out << "(" << to_string(spec.polys[i]) << ")*u[n" << (i == 0 ? "+1" : i == 1 ? "" : std::to_string(1 - static_cast<int>(i)))
            << "]";
    }
    out << " = 0";
    return out.str();
}

RecurrenceSpec catalan_recurrence()
{
    // (n+1)^2 u_{n+1} - (4 - 32 n^2) u_n + 256 (n-1)^2 u_{n-1} = 0
    RecurrenceSpec spec{2, 2, {}};
    spec.polys.push_back(Polynomial{{1, 2, 1}});
    spec.polys.push_back(Polynomial{{-4, 0, 32}});
    spec.polys.push_back(Polynomial{{256, -512, 256}});
    return spec.normalized();
}

namespace {

Rational residual(const RecurrenceSpec& spec, std::span<const Rational> seq, long n)
{
    Rational acc = 0;
    for (unsigned i = 0; i <= spec.order; ++i)
        acc += spec.polys[i](n) * seq[static_cast<std::size_t>(n + 1 - static_cast<long>(i))];
    return acc;
}

using Matrix = std::vector<std::vector<Integer>>;

void remove_content(std::vector<Integer>& row)
{
    Integer g = 0;
    for (const auto& x : row)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : row)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Fraction-free Gauss-Jordan elimination; returns a basis of the nullspace.
std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols)
{
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            const Integer a = m[rank][c];
            const Integer b = m[r][c];
            for (std::size_t k = 0; k < cols; ++k)
                m[r][k] = a * m[r][k] - b * m[rank][k];
            remove_content(m[r]);
        }
        pivot_cols.push_back(c);
        ++rank;
    }

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end())
            continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            const std::size_t pc = pivot_cols[r];
            v[pc] = -Rational(m[r][free]) / Rational(m[r][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RecurrenceSpec from_vector(const std::vector<Rational>& v, unsigned order, unsigned degree)
{
    RecurrenceSpec spec{order, degree, {}};
    for (unsigned i = 0; i <= order; ++i) {
        Polynomial poly;
        for (unsigned j = 0; j <= degree; ++j)
            poly.coeffs.push_back(v[i * (degree + 1) + j]);
        spec.polys.push_back(std::move(poly));
    }
    return spec;
}

} // namespace

RecurrenceReport verify(const RecurrenceSpec& spec, std::span<const Rational> seq, long start, long end)
{
    if (start < static_cast<long>(spec.order) - 1)
        throw std::invalid_argument("verify: start must be >= order - 1");
    if (end + 1 >= static_cast<long>(seq.size()))
        throw std::invalid_argument("verify: end + 1 beyond the sequence");
    RecurrenceReport report{start, end, {}};
    for (long n = start; n <= end; ++n)
        if (residual(spec, seq, n) != 0)
            report.violations.push_back(n);
    return report;
}

std::optional<RecurrenceSpec> fit(std::span<const Rational> seq, unsigned order, unsigned degree)
{
    const std::size_t unknowns = (order + 1) * (degree + 1);
    if (seq.size() < unknowns + order + 4)
        throw std::invalid_argument("fit: not enough terms for an overdetermined system");

    // Row for equation n: coefficient of c_{i,j} is n^j u_{n+1-i}.
    Matrix equations;
    for (long n = order; n + 1 < static_cast<long>(seq.size()); ++n) {
        std::vector<Rational> row(unknowns);
        for (unsigned i = 0; i <= order; ++i) {
            Rational u = seq[static_cast<std::size_t>(n + 1 - static_cast<long>(i))];
            Rational npow = 1;
            for (unsigned j = 0; j <= degree; ++j) {
                row[i * (degree + 1) + j] = npow * u;
                npow *= n;
            }
        }
        Integer den = 1;
        for (const auto& x : row)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> irow;
        for (const auto& x : row) {
            Rational scaled = x * den;
            irow.push_back(scaled.get_num());
        }
        remove_content(irow);
        equations.push_back(std::move(irow));
    }

    auto has_leading = [&](const std::vector<std::vector<Rational>>& basis) {
        for (const auto& v : basis)
            for (unsigned j = 0; j <= degree; ++j)
                if (v[j] != 0)
                    return true;
        return false;
    };
    auto with_caps = [&](const std::vector<long>& caps) {
        Matrix m = equations;
        for (unsigned i = 0; i < caps.size(); ++i)
            for (unsigned j = 0; j <= degree; ++j)
                if (static_cast<long>(j) > caps[i]) {
                    std::vector<Integer> unit(unknowns);
                    unit[i * (degree + 1) + j] = 1;
                    m.push_back(std::move(unit));
                }
        return nullspace(std::move(m), unknowns);
    };

    // Greedy lexicographic degree profile: smallest deg P_0, then P_1, ...
    std::vector<long> caps;
    for (unsigned i = 0; i <= order; ++i) {
        bool found = false;
        for (long cap = i == 0 ? 0 : -1; cap <= static_cast<long>(degree); ++cap) {
            caps.push_back(cap);
            if (has_leading(with_caps(caps))) {
                found = true;
                break;
            }
            caps.pop_back();
        }
        if (!found)
            return std::nullopt;
    }

    for (const auto& v : with_caps(caps)) {
        bool leading = false;
        for (unsigned j = 0; j <= degree; ++j)
            leading = leading || v[j] != 0;
        if (leading)
            return from_vector(v, order, degree).normalized();
    }
    return std::nullopt;
}

std::vector<Rational> generate(const RecurrenceSpec& spec, long first, std::span<const Rational> initial,
                               long last)
{
    if (initial.size() != spec.order)
        throw std::invalid_argument("generate: need exactly `order` initial values");
    std::vector<Rational> u(initial.begin(), initial.end());
    // u[idx] holds the value at index first + idx.
    for (long n = first + static_cast<long>(spec.order) - 1; n < last; ++n) {
        const Rational lead = spec.polys[0](n);
        if (lead == 0)
            throw std::domain_error("generate: leading polynomial vanishes at n = " + std::to_string(n));
        Rational acc = 0;
        for (unsigned i = 1; i <= spec.order; ++i)
            acc += spec.polys[i](n) * u[static_cast<std::size_t>(n + 1 - static_cast<long>(i) - first)];
        u.push_back(-acc / lead);
    }
    return u;
}

} // namespace apery
