#include "apery/diophantine.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>

namespace apery {

double theta_closed(const CaseConfig& cfg)
{
    const double log_p = std::log(static_cast<double>(cfg.p.value()));
    return cfg.v.get_d() * log_p / (cfg.e.get_d() * log_p + static_cast<double>(cfg.D));
}

double theta_closed(const CaseId& id) { return theta_closed(catalog(id)); }

namespace {

const SequenceRow& row_at(const SequenceTable& t, long n)
{
    if (n < 0 || static_cast<std::size_t>(n) >= t.rows.size())
        throw std::invalid_argument("window index " + std::to_string(n) + " outside the sequence table");
    return t.rows[static_cast<std::size_t>(n)];
}

double least_squares_slope(const std::vector<std::pair<double, double>>& pts)
{
    if (pts.size() < 3)
        throw InsufficientData("fewer than 3 usable points");
    double mx = 0, my = 0;
    for (const auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0, sxx = 0;
    for (const auto& [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    return sxy / sxx;
}

double log_max_size(const Integer& p, const Integer& q)
{
    Integer ap = abs(p);
    return log_abs(ap > q ? ap : q);
}

} // namespace

std::vector<std::pair<long, long>> cross_difference_valuations(const SequenceTable& t, const Prime& p,
                                                               IndexWindow window)
{
    std::vector<std::pair<long, long>> out;
    for (long n = window.first; n <= window.last; ++n) {
        const auto& r0 = row_at(t, n);
        const auto& r1 = row_at(t, n + 1);
        Rational cross = r0.a * r1.b - r1.a * r0.b;
        auto v = vp(cross, p);
        if (v.is_finite())
            out.emplace_back(n, v.value());
    }
    return out;
}

double slope_empirical(const SequenceTable& t, const Prime& p, IndexWindow window)
{
    std::vector<std::pair<double, double>> pts;
    for (long n = window.first; n <= window.last; ++n)
        if (row_at(t, n).degenerate() || row_at(t, n + 1).degenerate())
            throw InsufficientData("degenerate row inside the slope window");
    for (const auto& [n, v] : cross_difference_valuations(t, p, window))
        pts.emplace_back(static_cast<double>(n), static_cast<double>(v));
    return least_squares_slope(pts);
}

double growth_empirical(const SequenceTable& t, IndexWindow window)
{
    std::vector<std::pair<double, double>> pts;
    for (long n = window.first; n <= window.last; ++n) {
        const auto& r = row_at(t, n);
        if (!r.degenerate())
            pts.emplace_back(static_cast<double>(n), log_max_size(*r.p, *r.q));
    }
    return least_squares_slope(pts);
}

std::string to_string(RowStatus s)
{
    switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::ZeroGap: return "ZERO_GAP";
    case RowStatus::Uncertified: return "UNCERTIFIED";
    }
    return "?";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::WitnessPass: return "WITNESS_PASS";
    case Verdict::WitnessFail: return "WITNESS_FAIL";
    case Verdict::Uncertified: return "UNCERTIFIED";
    }
    return "?";
}

double implied_exponent(long valuation_gap, const Prime& p, double log_max_size)
{
    const double num = static_cast<double>(valuation_gap) * std::log(static_cast<double>(p.value()));
    if (log_max_size > 0)
        return num / log_max_size;
    return num > 0 ? std::numeric_limits<double>::infinity() : 0.0;
}

std::optional<int> resolve_sign(const SequenceTable& t, const PadicValue& eta, IndexWindow window)
{
    std::vector<const SequenceRow*> usable;
    for (long n = window.first; n <= window.last && usable.size() < 2; ++n)
        if (!row_at(t, n).degenerate())
            usable.push_back(&row_at(t, n));
    if (usable.size() < 2)
        return std::nullopt;

    const long cap = eta.exact ? LONG_MAX : eta.agreement_exponent;
    auto gap = [&](const SequenceRow& r, int sigma) {
        auto v = vp_diff(eta.representative, Rational(sigma * make_rational(*r.p, *r.q)), eta.p);
        return v.is_infinite() ? cap : std::min(v.value(), cap);
    };
    const long plus = std::min(gap(*usable[0], 1), gap(*usable[1], 1));
    const long minus = std::min(gap(*usable[0], -1), gap(*usable[1], -1));
    if (plus == minus)
        return std::nullopt;
    return plus > minus ? 1 : -1;
}

CriterionResult criterion_check(const SequenceTable& t, const PadicValue& eta, double theta_required,
                                IndexWindow window, std::optional<int> sign)
{
    const auto cfg = catalog(t.id);
    if (eta.p != cfg.p)
        throw std::invalid_argument("criterion_check: oracle prime does not match the case");
    if (!sign)
        sign = resolve_sign(t, eta, window);

    const double theta = theta_closed(cfg);
    const double log_p = std::log(static_cast<double>(cfg.p.value()));
    CriterionResult result;
    result.summary = {t.id, Verdict::Uncertified, theta, theta_required, 0.0, 0, 0, sign.value_or(0),
                      eta.exact ? LONG_MAX : eta.agreement_exponent, window};

    for (long n = window.first; n <= window.last; ++n) {
        const auto& row = row_at(t, n);
        if (row.degenerate())
            continue;
        Certificate cert{t.id, n, *row.p, *row.q, 0, log_max_size(*row.p, *row.q), 0.0, theta,
                         sign.value_or(0), result.summary.oracle_exponent, false, RowStatus::Uncertified};

        if (!sign) {
            cert.valuation_gap = eta.agreement_exponent;
        } else {
            const Rational approx = *sign * make_rational(*row.p, *row.q);
            const auto gap = vp_diff(eta.representative, approx, eta.p);
            if (eta.exact && gap.is_infinite()) {
                cert.valuation_gap = LONG_MAX;
                cert.certified = true;
                cert.status = RowStatus::ZeroGap;
            } else if (!eta.exact && (gap.is_infinite() || gap.value() >= eta.agreement_exponent)) {
                cert.valuation_gap = eta.agreement_exponent;
            } else {
                cert.valuation_gap = gap.value();
                cert.certified = true;
                const bool holds = static_cast<double>(cert.valuation_gap) * log_p
                    >= (theta_required - kGuardBand) * cert.log_max_size;
                cert.status = holds ? RowStatus::Pass : RowStatus::Fail;
            }
        }
        if (cert.status != RowStatus::ZeroGap)
            cert.implied_exponent = implied_exponent(cert.valuation_gap, cfg.p, cert.log_max_size);

        if (cert.certified) {
            ++result.summary.certified_rows;
            if (cert.status != RowStatus::Pass)
                ++result.summary.failing_rows;
            if (cert.status != RowStatus::ZeroGap)
                result.summary.best_implied_exponent
                    = std::max(result.summary.best_implied_exponent, cert.implied_exponent);
        }
        result.certificates.push_back(std::move(cert));
    }

    auto& s = result.summary;
    if (s.certified_rows == 0)
        s.verdict = Verdict::Uncertified;
    else if (s.failing_rows > 0 || theta <= 1.0 + kGuardBand)
        s.verdict = Verdict::WitnessFail;
    else
        s.verdict = Verdict::WitnessPass;
    return result;
}

bool lemma1_bound(const Rational& ab, const Rational& cd, const Prime& p, long n)
{
    if (ab == cd)
        throw std::invalid_argument("lemma1_bound: fractions must be distinct");
    const auto gap = vp_diff(ab, cd, p);
    if (gap.is_finite() && gap.value() < n)
        throw std::invalid_argument("lemma1_bound: |a/b - c/d|_p > p^-n");
    if (n <= 0)
        return true;
    const Integer a = abs(ab.get_num()), b = ab.get_den();
    const Integer c = abs(cd.get_num()), d = cd.get_den();
    const Integer& size = c > d ? c : d;
    return size * (a + b) >= ipow(Integer(p.value()), static_cast<unsigned long>(n));
}

} // namespace apery
