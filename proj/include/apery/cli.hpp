#pragma once

#include "apery/curves.hpp"
#include "apery/diophantine.hpp"
#include "apery/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace apery {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;  // a q-series canary or integrality check failed
inline constexpr int kExitUsage = 2;

/// Parameters shared by the subcommands after validation.
struct RunConfig {
    CaseId id{Family::ZetaP2, 1};
    std::size_t count = 25;
    long target_bits = 40;
    std::optional<IndexWindow> window;
    double theta_required = 1.01;
    OutputFormat format = OutputFormat::Json;
    std::string output_path;  // empty: standard output
};

/// Cap on sequence rows and q-precision; APERY_MAX_TERMS overrides the default 64.
std::size_t max_terms();

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace apery
