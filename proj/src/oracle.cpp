#include "apery/oracle.hpp"

#include "apery/eisenstein.hpp"

#include <algorithm>
#include <climits>

namespace apery {

PadicValue PadicValue::exact_value(const Rational& r, const Prime& p)
{
    return {r, LONG_MAX, p, true};
}

std::vector<PadicDigit> PadicValue::certified_digits(std::size_t max_digits) const
{
    auto digits = padic_digits(representative, p, max_digits);
    if (!exact)
        std::erase_if(digits, [&](const PadicDigit& d) { return d.exponent >= agreement_exponent; });
    return digits;
}

PadicValue PadicValue::truncated() const
{
    if (exact)
        return *this;
    const auto v = vp(representative, p);
    if (v.is_infinite() || v.value() >= agreement_exponent)
        return {0, agreement_exponent, p, false};
    const auto digits = padic_digits(representative, p, static_cast<std::size_t>(agreement_exponent - v.value()));
    std::vector<PadicDigit> kept;
    for (const auto& d : digits)
        if (d.exponent < agreement_exponent)
            kept.push_back(d);
    return {from_padic_digits(kept, p), agreement_exponent, p, false};
}

long PadicValue::relative_precision() const
{
    if (exact)
        return LONG_MAX;
    const auto v = vp(representative, p);
    // A zero representative certifies nothing about the leading digit.
    if (v.is_infinite())
        return 0;
    return agreement_exponent - v.value();
}

PadicValue PadicValue::combine(const PadicValue& other) const
{
    if (p != other.p)
        throw InconsistentValues("combine: different primes");
    const long m = std::min(exact ? LONG_MAX : agreement_exponent,
                            other.exact ? LONG_MAX : other.agreement_exponent);
    const auto gap = vp_diff(representative, other.representative, p);
    if (gap.is_finite() && gap.value() < m)
        throw InconsistentValues("p-adic enclosures disagree at order " + std::to_string(gap.value()));
    // Keep the sharper of the two.
    if (exact || (!other.exact && agreement_exponent >= other.agreement_exponent))
        return *this;
    return other;
}

Rational regularized_node_value(OracleTarget target, const Prime& p, unsigned s)
{
    if (s < 2 || s % 2 != 0)
        throw std::invalid_argument("node weight must be even and >= 2");
    if (target == OracleTarget::Catalan)
        return l_chi_neg(s);
    Integer pk = ipow(Integer(p.value()), s - 1);
    return -Rational(1 - pk) * bernoulli(s);
}

Rational classical_node_value(OracleTarget target, const Prime& p, unsigned s)
{
    if (target == OracleTarget::Catalan)
        return l_chi_neg(s);
    return zeta_star(p, s);
}

namespace {

// Smallest s0 >= 2 with s0 = target_weight (mod step); returns (s0, m0) with
// s0 = target_weight + m0 * step.
std::pair<unsigned, long> base_node(long target_weight, unsigned step)
{
    long m0 = 0;
    while (target_weight + m0 * static_cast<long>(step) < 2)
        ++m0;
    return {static_cast<unsigned>(target_weight + m0 * static_cast<long>(step)), m0};
}

Rational undo_regularization(OracleTarget target, const Rational& g, long target_weight)
{
    return target == OracleTarget::Zeta ? Rational(g / target_weight) : g;
}

// Exponent certified by three successive refinements: the first m digits are
// unchanged by two successive parameter increases.
long stabilized_exponent(const Rational& r0, const Rational& r1, const Rational& r2, const Prime& p,
                         long cap)
{
    auto as_long = [&](const Valuation& v) { return v.is_infinite() ? cap : v.value(); };
    return std::min(as_long(vp_diff(r2, r1, p)), as_long(vp_diff(r1, r0, p)));
}

StrategyReport run_newton_family(OracleTarget target, const Prime& p, long target_weight, unsigned t,
                                 const OracleOptions& opts)
{
    const unsigned step = static_cast<unsigned>((p.value() - 1) * ipow(Integer(p.value()), t).get_si());
    const auto [s0, m0] = base_node(target_weight, step);
    (void)m0;

    StrategyReport report{"newton-step-" + std::to_string(step), {}, {0, LONG_MIN, p, false}, false};
    for (unsigned nodes = opts.first_level;; nodes += opts.level_step) {
        const unsigned top = s0 + (nodes - 1) * step;
        if (top > opts.max_weight)
            break;
        Rational g = newton_extrapolate(target, p, target_weight, step, nodes);
        RefinementLevel level{nodes, top, undo_regularization(target, g, target_weight), LONG_MIN};
        auto& levels = report.levels;
        if (levels.size() >= 2)
            level.certified = stabilized_exponent(levels[levels.size() - 2].value, levels.back().value,
                                                  level.value, p, opts.target_bits);
        levels.push_back(std::move(level));
        if (levels.back().certified >= opts.target_bits) {
            report.reached_target = true;
            break;
        }
    }
    if (!report.levels.empty())
        report.value = {report.levels.back().value, report.levels.back().certified, p, false};
    return report;
}

StrategyReport run_direct_limit(OracleTarget target, const Prime& p, long target_weight,
                                const OracleOptions& opts)
{
    StrategyReport report{"direct-kummer-limit", {}, {0, LONG_MIN, p, false}, false};
    for (unsigned t = 0;; ++t) {
        const long step = (p.value() - 1) * ipow(Integer(p.value()), t).get_si();
        const long s = target_weight + step;
        if (s > static_cast<long>(opts.max_direct_weight))
            break;
        if (s < 2)
            continue;
        RefinementLevel level{1, static_cast<unsigned>(s), classical_node_value(target, p, static_cast<unsigned>(s)),
                              LONG_MIN};
        auto& levels = report.levels;
        if (levels.size() >= 2)
            level.certified = stabilized_exponent(levels[levels.size() - 2].value, levels.back().value,
                                                  level.value, p, opts.target_bits);
        levels.push_back(std::move(level));
    }
    if (!report.levels.empty())
        report.value = {report.levels.back().value, report.levels.back().certified, p, false};
    report.reached_target = report.value.agreement_exponent >= opts.target_bits;
    return report;
}

OracleReport run_oracle(OracleTarget target, const Prime& p, long n, const OracleOptions& opts)
{
    if (opts.target_bits < 1)
        throw std::invalid_argument("oracle: target_bits must be positive");
    const long target_weight = -2 * n;

    OracleReport report{target, p, n, {0, LONG_MIN, p, false}, false, {}};
    report.strategies.push_back(run_newton_family(target, p, target_weight, 1, opts));
    report.strategies.push_back(run_newton_family(target, p, target_weight, 2, opts));
    report.strategies.push_back(run_direct_limit(target, p, target_weight, opts));

    const auto& fine = report.strategies[0];
    const auto& coarse = report.strategies[1];
    const auto& direct = report.strategies[2];
    if (fine.levels.size() < 3 || coarse.levels.size() < 3)
        throw PrecisionUnreachable("oracle: node cap leaves fewer than three refinement levels", fine.value);

    // The two Newton families must agree; the weaker exponent is reported.
    const long m = std::min(fine.value.agreement_exponent, coarse.value.agreement_exponent);
    fine.value.combine(coarse.value);
    report.value = PadicValue{fine.value.representative, m, p, false}.truncated();

    if (direct.levels.size() >= 3)
        report.value.combine(direct.value);

    report.reached_target = fine.reached_target && coarse.reached_target;
    return report;
}

} // namespace

Rational newton_extrapolate(OracleTarget target, const Prime& p, long target_weight, unsigned step,
                            unsigned nodes)
{
    if (nodes == 0 || step == 0)
        throw std::invalid_argument("newton_extrapolate: need at least one node and a positive step");
    const auto [s0, m0] = base_node(target_weight, step);

    std::vector<Rational> diff;
    diff.reserve(nodes);
    for (unsigned j = 0; j < nodes; ++j)
        diff.push_back(regularized_node_value(target, p, s0 + j * step));

    // sum_i C(-m0, i) Delta^i g(s0), with C(-m0, i) = (-1)^i C(m0 + i - 1, i).
    Rational result = 0;
    Integer coeff = 1;
    for (unsigned i = 0; i < nodes; ++i) {
        if (i > 0) {
            coeff *= -(m0 + static_cast<long>(i) - 1);
            mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), i);
        }
        result += Rational(coeff) * diff[0];
        for (unsigned j = 0; j + 1 < diff.size(); ++j)
            diff[j] = diff[j + 1] - diff[j];
        diff.pop_back();
        if (coeff == 0)
            break;
    }
    return result;
}

OracleReport zeta_p_oracle_report(const Prime& p, long n, const OracleOptions& opts)
{
    if (n < 1)
        throw std::invalid_argument("zeta_p_oracle: n must be >= 1");
    return run_oracle(OracleTarget::Zeta, p, n, opts);
}

OracleReport catalan_2adic_oracle_report(const OracleOptions& opts)
{
    return run_oracle(OracleTarget::Catalan, Prime(2), 1, opts);
}

PadicValue zeta_p_oracle(const Prime& p, long n, long target_bits)
{
    OracleOptions opts;
    opts.target_bits = target_bits;
    auto report = zeta_p_oracle_report(p, n, opts);
    if (!report.reached_target)
        throw PrecisionUnreachable("zeta_p_oracle: target precision not reached", report.value);
    return report.value;
}

PadicValue catalan_2adic_oracle(long target_bits)
{
    OracleOptions opts;
    opts.target_bits = target_bits;
    auto report = catalan_2adic_oracle_report(opts);
    if (!report.reached_target)
        throw PrecisionUnreachable("catalan_2adic_oracle: target precision not reached", report.value);
    return report.value;
}

} // namespace apery
