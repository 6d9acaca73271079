#include "apery/expansion.hpp"

#include <algorithm>

namespace apery {

std::vector<Rational> reexpand(const QSeries& H, const QSeries& f, std::size_t count)
{
    if (f.prec() < 2 || f[0] != 0 || f[1] != 1)
        throw std::invalid_argument("reexpand: f must be q + O(q^2)");
    if (count > H.prec())
        throw std::invalid_argument("reexpand: count exceeds precision of H");

    const std::size_t prec = std::min(H.prec(), f.prec());
    if (count > prec)
        throw std::invalid_argument("reexpand: count exceeds precision of f");

    // f^m = q^m + ..., so the q^m coefficient of the running remainder is c_m.
    std::vector<Rational> out;
    out.reserve(count);
    QSeries remainder = H.truncate(prec);
    QSeries f_power = QSeries::constant(1, prec);
    const QSeries f_trunc = f.truncate(prec);
    for (std::size_t m = 0; m < count; ++m) {
        const Rational c = remainder[m];
        out.push_back(c);
        if (c != 0)
            for (std::size_t i = m; i < prec; ++i)
                remainder[i] -= c * f_power[i];
        if (m + 1 < count)
            f_power = f_power * f_trunc;
    }
    return out;
}

std::vector<Rational> SequenceTable::a_values() const
{
    std::vector<Rational> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back(r.a);
    return out;
}

std::vector<Rational> SequenceTable::b_values() const
{
    std::vector<Rational> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back(r.b);
    return out;
}

std::size_t default_working_prec(std::size_t count) { return 2 * count + 8; }

RawExpansion raw_expansion(const CaseId& id, std::size_t count, std::size_t prec)
{
    if (prec < count)
        throw std::invalid_argument("raw_expansion: precision below row count");
    const auto cfg = catalog(id);
    const QSeries f = uniformizer_series(id, prec);
    const QSeries normalized = base_form(id, prec) * cfg.lambda;
    const QSeries with_companion = normalized * companion_form(id, prec);
    return {reexpand(with_companion, f, count), reexpand(normalized, f, count)};
}

SequenceTable sequences(const CaseId& id, std::size_t count, std::size_t prec)
{
    if (prec == 0)
        prec = default_working_prec(count);
    if (2 * count > prec)
        throw std::invalid_argument("sequences: working precision must be at least twice the row count");

    const auto cfg = catalog(id);
    SequenceTable table;
    table.id = id;
    table.sign_a = cfg.sign_a;
    table.sign_b = cfg.sign_b;
    table.working_prec = prec;
    if (count == 0)
        return table;

    auto raw = raw_expansion(id, count, prec);
    table.rows.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        SequenceRow row{static_cast<long>(n), cfg.sign_a * raw.A[n], cfg.sign_b * raw.B[n], {}, {}};
        if (row.b != 0) {
            Rational ratio = 2 * row.a / row.b;
            row.p = ratio.get_num();
            row.q = ratio.get_den();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

bool IntegralityReport::ok() const
{
    return std::all_of(rows.begin(), rows.end(),
                       [](const IntegralityRow& r) { return r.b_integral && r.a_within_bound; });
}

IntegralityReport integrality_report(const SequenceTable& table, bool throw_on_violation)
{
    const auto cfg = catalog(table.id);
    IntegralityReport report{cfg.D, {}};
    for (const auto& row : table.rows) {
        Integer bound = row.n >= 1 ? ipow(lcm_upto(row.n), cfg.D) : Integer(1);
        const Integer& den = row.a.get_den();
        IntegralityRow r{row.n, den, bound, row.b.get_den() == 1, mpz_divisible_p(bound.get_mpz_t(), den.get_mpz_t()) != 0};
        if (throw_on_violation && !(r.b_integral && r.a_within_bound))
            throw IntegralityViolation("integrality fails for " + case_label(table.id) + " at n = "
                                       + std::to_string(row.n));
        report.rows.push_back(std::move(r));
    }
    return report;
}

} // namespace apery
