#pragma once

#include "apery/curves.hpp"
#include "apery/exactnum.hpp"
#include "apery/expansion.hpp"
#include "apery/oracle.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apery {

inline constexpr double kGuardBand = 1e-6;

/// theta = v log p / (e log p + D): p-adic decay against Archimedean growth
/// of the approximants 2a_n/b_n.
double theta_closed(const CaseId& id);
double theta_closed(const CaseConfig& cfg);

class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IndexWindow {
    long first;
    long last;  // inclusive
};

/// vp(a_n b_{n+1} - a_{n+1} b_n) for n in the window (needs rows up to last + 1).
std::vector<std::pair<long, long>> cross_difference_valuations(const SequenceTable& t, const Prime& p,
                                                               IndexWindow window);

/// Least-squares slope of the cross-difference valuations against n.
double slope_empirical(const SequenceTable& t, const Prime& p, IndexWindow window);

/// Least-squares slope of log max(|p_n|, q_n) against n.
double growth_empirical(const SequenceTable& t, IndexWindow window);

enum class RowStatus { Pass, Fail, ZeroGap, Uncertified };
std::string to_string(RowStatus s);

struct Certificate {
    CaseId id;
    long n;
    Integer p_n;
    Integer q_n;
    long valuation_gap;      // exact gap when certified, otherwise the lower bound m
    double log_max_size;     // log max(|p_n|, q_n)
    double implied_exponent; // valuation_gap * log p / log_max_size
    double theta_closed;
    int sign;
    long oracle_exponent;
    bool certified;
    RowStatus status;
};

/// Recompute implied_exponent from the record; used as an invariant check.
double implied_exponent(long valuation_gap, const Prime& p, double log_max_size);

/// Sign sigma in {+1, -1} making vp(eta - sigma * 2a_n/b_n) grow, judged at the
/// first two usable window indices. nullopt if neither sign separates.
std::optional<int> resolve_sign(const SequenceTable& t, const PadicValue& eta, IndexWindow window);

enum class Verdict { WitnessPass, WitnessFail, Uncertified };
std::string to_string(Verdict v);

struct CriterionSummary {
    CaseId id;
    Verdict verdict;
    double theta_closed;
    double theta_required;
    double best_implied_exponent;  // largest over certified rows
    long certified_rows;
    long failing_rows;
    int sign;
    long oracle_exponent;
    IndexWindow window;
};

struct CriterionResult {
    std::vector<Certificate> certificates;
    CriterionSummary summary;
};

/// Finite-range witness computation for the irrationality criterion:
/// 0 < |eta - p_n/q_n|_p <= max(|p_n|, q_n)^{-theta_required} at each n.
CriterionResult criterion_check(const SequenceTable& t, const PadicValue& eta, double theta_required,
                                IndexWindow window, std::optional<int> sign = std::nullopt);

/// Checks max(|c|, |d|) >= p^n / (|a| + |b|) given |a/b - c/d|_p <= p^-n.
/// Throws std::invalid_argument if the hypothesis does not hold.
bool lemma1_bound(const Rational& ab, const Rational& cd, const Prime& p, long n);

} // namespace apery
