#pragma once

#include "apery/exactnum.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace apery {

/// A p-adic number known to agree with `representative` to order
/// p^agreement_exponent, i.e. the set of x with vp(x - representative) >= m.
/// `exact` marks a value known exactly (m is then ignored).
struct PadicValue {
    Rational representative;
    long agreement_exponent;
    Prime p;
    bool exact = false;

    static PadicValue exact_value(const Rational& r, const Prime& p);

    /// Digits strictly below the agreement exponent.
    std::vector<PadicDigit> certified_digits(std::size_t max_digits = 64) const;

    /// Same enclosure with the representative cut to its digits below m.
    PadicValue truncated() const;

    /// Number of certified digits counted from the leading one.
    long relative_precision() const;

    /// Intersection of two enclosures of the same quantity; throws
    /// InconsistentValues if they disagree below min(m, m').
    PadicValue combine(const PadicValue& other) const;
};

class InconsistentValues : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PrecisionUnreachable : public std::runtime_error {
public:
    PrecisionUnreachable(const std::string& what, PadicValue best)
        : std::runtime_error(what), best_(std::move(best))
    {
    }
    const PadicValue& best() const noexcept { return best_; }

private:
    PadicValue best_;
};

enum class OracleTarget { Zeta, Catalan };

struct OracleOptions {
    long target_bits = 40;
    unsigned max_weight = 4096;         // node weights 2k stay at or below this
    unsigned max_direct_weight = 1024;  // direct Kummer-limit terms
    unsigned first_level = 4;           // Newton nodes at the first level
    unsigned level_step = 4;
};

struct RefinementLevel {
    unsigned nodes;
    unsigned max_weight;
    Rational value;
    long certified;  // stabilized exponent after this level (LONG_MIN before 3 levels)
};

struct StrategyReport {
    std::string name;
    std::vector<RefinementLevel> levels;
    PadicValue value;
    bool reached_target;
};

struct OracleReport {
    OracleTarget target;
    Prime p;
    long n;  // zeta_p(1 + 2n); 1 for Catalan
    PadicValue value;
    bool reached_target;
    std::vector<StrategyReport> strategies;  // two Newton families, then the direct limit
};

/// Pole-free interpolated quantity at an even node weight s >= 2:
/// zeta: s * zeta*_p(1 - s) = -(1 - p^{s-1}) B_s;  Catalan: L(-s, chi) = E_s / 2.
Rational regularized_node_value(OracleTarget target, const Prime& p, unsigned s);

/// zeta*_p(1 - s) or L(-s, chi) at a classical node.
Rational classical_node_value(OracleTarget target, const Prime& p, unsigned s);

/// Newton forward-difference extrapolation of the regularized values on the
/// progression s_j = s0 + j*h (s0 the smallest such weight >= 2 congruent to
/// target_weight mod h), evaluated back at target_weight.
Rational newton_extrapolate(OracleTarget target, const Prime& p, long target_weight, unsigned step,
                            unsigned nodes);

OracleReport zeta_p_oracle_report(const Prime& p, long n, const OracleOptions& opts = {});
OracleReport catalan_2adic_oracle_report(const OracleOptions& opts = {});

/// Throw PrecisionUnreachable (carrying the best value) if the target is missed.
PadicValue zeta_p_oracle(const Prime& p, long n, long target_bits = 40);
PadicValue catalan_2adic_oracle(long target_bits = 40);

} // namespace apery
