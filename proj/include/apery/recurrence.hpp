#pragma once

#include "apery/exactnum.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace apery {

/// Polynomial in n with coefficients listed lowest degree first.
struct Polynomial {
    std::vector<Rational> coeffs;

    Rational operator()(const Rational& n) const;
    long degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);
};

std::string to_string(const Polynomial& p);

/// sum_{i=0}^{r} P_i(n) u_{n+1-i} = 0, P_0 leading.
struct RecurrenceSpec {
    unsigned order = 0;
    unsigned degree = 0;
    std::vector<Polynomial> polys;  // order + 1 entries

    /// Integer coefficients with gcd 1 and positive leading coefficient of P_0.
    /// Throws std::invalid_argument if P_0 is identically zero.
    RecurrenceSpec normalized() const;

    friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

std::string to_string(const RecurrenceSpec& spec);

/// (n+1)^2 u_{n+1} = (4 - 32 n^2) u_n - 256 (n-1)^2 u_{n-1}, normalized.
RecurrenceSpec catalan_recurrence();

struct RecurrenceReport {
    long start;
    long end;
    std::vector<long> violations;

    bool ok() const { return violations.empty(); }
};

/// Check the recurrence at every n in [start, end]; needs start >= order - 1
/// and end + 1 < seq.size().
RecurrenceReport verify(const RecurrenceSpec& spec, std::span<const Rational> seq, long start, long end);

/// Exact nullspace fit of an order-r, degree-d recurrence using the equations
/// at n = r .. seq.size() - 2. nullopt when only the zero solution exists.
std::optional<RecurrenceSpec> fit(std::span<const Rational> seq, unsigned order, unsigned degree);

/// Run the recurrence forward from u_{first}, ..., u_{first+order-1}
/// through index `last`; returns values for indices first..last.
std::vector<Rational> generate(const RecurrenceSpec& spec, long first, std::span<const Rational> initial,
                               long last);

} // namespace apery
