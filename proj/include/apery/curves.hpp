#pragma once

#include "apery/exactnum.hpp"
#include "apery/qseries.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apery {

/// Raised when one of the q-series canaries disagrees; the configuration
/// is inconsistent and nothing downstream can be trusted.
class IdentityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Family { ZetaP2, ZetaP3, ZetaP5, CatalanP2 };

struct CaseId {
    Family family;
    unsigned k = 1;  // zeta cases: series weight 2k; ignored for Catalan

    friend bool operator==(const CaseId&, const CaseId&) = default;
};

CaseId zeta_p2(unsigned k);
CaseId zeta_p3(unsigned k);
CaseId zeta_p5(unsigned k);
CaseId catalan_p2();

/// "zeta-p2", "zeta-p3", "zeta-p5", "catalan-p2".
std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

/// "zeta-p2(k=1)" style label for reports.
std::string case_label(const CaseId& id);

struct CaseConfig {
    CaseId id;
    Prime p;
    unsigned two_k;         // weight of E* (zeta) or 0 for Catalan (F_1)
    ProductRecipe uniformizer;
    Rational lambda;        // lambda * (weight-2k form) has the smallest positive integer constant term
    Rational v;             // ordinary-locus radius exponent: p^v
    Rational e;             // nearest Archimedean branch point at |f| = p^{-e}
    unsigned D;             // lcm(1..n)^D a_n is integral
    int sign_a;
    int sign_b;
    std::vector<std::string> notes;  // geometry facts, documentation only
};

CaseConfig catalog(const CaseId& id);

QSeries uniformizer_series(const CaseId& id, std::size_t prec);

/// The weight-2k form whose re-expansion gives b_n (E*_{2k}, or F_1).
QSeries base_form(const CaseId& id, std::size_t prec);

/// The companion E'_{-2k} (or F'_{-1}).
QSeries companion_form(const CaseId& id, std::size_t prec);

/// mu with theta(f)/f = mu * E*_2 (zeta cases) or mu * F_1^2 (Catalan).
/// Throws IdentityViolation if no single constant works.
Rational check_logderivative(const CaseId& id, std::size_t prec);

/// mu > 0 with (mu E*_2)^6 / Delta = (1 + 2^6 f)^3 / f for p = 2, compared
/// after multiplying both sides by f.
Rational check_elliptic_identity(std::size_t prec);

/// Delta(m tau)/Delta(tau) as a ratio of two eta products, shifted by q^{m-1}.
QSeries delta_ratio_series(unsigned m, std::size_t prec);

/// Delta(tau) = q prod (1 - q^n)^24.
QSeries delta_series(std::size_t prec);

} // namespace apery
