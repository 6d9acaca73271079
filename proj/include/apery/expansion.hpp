#pragma once

#include "apery/curves.hpp"
#include "apery/exactnum.hpp"
#include "apery/qseries.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apery {

/// Coefficients c_0..c_{count-1} with H = sum c_m f^m + O(q^count).
/// f must be q + O(q^2).
std::vector<Rational> reexpand(const QSeries& H, const QSeries& f, std::size_t count);

struct SequenceRow {
    long n;
    Rational a;
    Rational b;
    std::optional<Integer> p;  // reduced 2a/b = p/q, q > 0; empty when b = 0
    std::optional<Integer> q;

    bool degenerate() const noexcept { return !p.has_value(); }
};

struct SequenceTable {
    CaseId id;
    int sign_a = 1;
    int sign_b = 1;
    std::size_t working_prec = 0;
    std::vector<SequenceRow> rows;

    std::size_t count() const noexcept { return rows.size(); }
    std::vector<Rational> a_values() const;
    std::vector<Rational> b_values() const;
};

/// Default working precision for `count` rows.
std::size_t default_working_prec(std::size_t count);

/// Re-expand lambda * base * (companion + eta) in the case's uniformizer.
/// prec = 0 picks default_working_prec(count).
SequenceTable sequences(const CaseId& id, std::size_t count, std::size_t prec = 0);

/// The raw pair (A, B): lambda*base*companion and lambda*base re-expanded,
/// before sign flags.
struct RawExpansion {
    std::vector<Rational> A;
    std::vector<Rational> B;
};
RawExpansion raw_expansion(const CaseId& id, std::size_t count, std::size_t prec);

class IntegralityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IntegralityRow {
    long n;
    Integer a_denominator;
    Integer bound;          // lcm(1..n)^D, or 1 at n = 0
    bool b_integral;
    bool a_within_bound;    // a_denominator divides bound
};

struct IntegralityReport {
    unsigned D;
    std::vector<IntegralityRow> rows;

    bool ok() const;
};

/// Checks b_n in Z and lcm(1..n)^D a_n in Z for every row.
/// Throws IntegralityViolation on the first failure unless `throw_on_violation` is false.
IntegralityReport integrality_report(const SequenceTable& table, bool throw_on_violation = true);

} // namespace apery
