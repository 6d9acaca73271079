#include "apery/cli.hpp"

#include "apery/eisenstein.hpp"
#include "apery/expansion.hpp"
#include "apery/oracle.hpp"
#include "apery/recurrence.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace apery {

std::size_t max_terms()
{
    if (const char* env = std::getenv("APERY_MAX_TERMS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 64;
}

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr long kMaxBits = 256;

const std::map<std::string, OutputFormat> kFormats{
    {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"plain", OutputFormat::Plain}};

const std::vector<std::string> kCases{"zeta-p2", "zeta-p3", "zeta-p5", "catalan-p2"};

CaseId make_case(const std::string& name, unsigned k)
{
    auto family = parse_family(name);
    if (!family)
        throw UsageError("unknown case: " + name);
    if (*family == Family::CatalanP2)
        return catalan_p2();
    if (k < 1)
        throw UsageError("-k must be >= 1");
    return {*family, k};
}

void check_count(std::size_t count)
{
    if (count > max_terms())
        throw UsageError("row count " + std::to_string(count) + " exceeds the cap " + std::to_string(max_terms())
                         + " (APERY_MAX_TERMS)");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file " + cfg.output_path);
    file << text;
}

// Canaries: if these disagree the normalization is broken.
void run_identity_checks(const CaseId& id)
{
    const auto cfg = catalog(id);
    const Rational mu = check_logderivative(id, 64);
    const Rational inv_f1 = Rational(2) / l_chi_neg(0);
    const Rational expected = id.family == Family::CatalanP2 ? Rational(inv_f1 * inv_f1)
                                                             : Rational(2) / zeta_star(cfg.p, 2);
    if (mu != expected)
        throw IdentityViolation("theta f / f constant " + to_string(mu) + " differs from " + to_string(expected));
    if (id.family == Family::ZetaP2 && check_elliptic_identity(64) != 24)
        throw IdentityViolation("elliptic identity scalar differs from 24");
}

QSeries build_series(const std::string& form, const std::optional<CaseId>& id, std::optional<long> p_opt,
                     unsigned weight, std::size_t prec)
{
    long p_value = 2;
    if (id)
        p_value = catalog(*id).p.value();
    if (p_opt)
        p_value = *p_opt;
    if (!is_prime(p_value))
        throw UsageError("--p must be prime");
    const Prime p(p_value);

    auto need_weight = [&](bool odd) {
        if (weight == 0 || (weight % 2 == 1) != odd)
            throw UsageError(std::string("--weight must be ") + (odd ? "odd" : "even and >= 2") + " for form " + form);
    };
    if (form == "e") {
        need_weight(false);
        return series_E(weight, prec);
    }
    if (form == "estar") {
        need_weight(false);
        return series_E_star(p, weight, prec);
    }
    if (form == "evil") {
        need_weight(false);
        return series_evil(p, weight, prec);
    }
    if (form == "eprime") {
        need_weight(false);
        return series_E_prime(p, weight, prec);
    }
    if (form == "f") {
        need_weight(true);
        return series_F(weight, prec);
    }
    if (form == "f-lambert") {
        need_weight(true);
        return series_F_lambert(weight, prec);
    }
    if (form == "fprime")
        return series_F_prime(prec);
    if (form == "uniformizer") {
        if (!id)
            throw UsageError("--form uniformizer needs --case");
        return uniformizer_series(*id, prec);
    }
    if (form == "delta")
        return delta_series(prec);
    throw UsageError("unknown form: " + form);
}

std::string render_recurrence(const RecurrenceSpec& spec)
{
    std::string polys = "[";
    for (std::size_t i = 0; i < spec.polys.size(); ++i) {
        polys += i ? ",[" : "[";
        for (std::size_t j = 0; j < spec.polys[i].coeffs.size(); ++j)
            polys += (j ? "," : "") + json_quote(to_string(spec.polys[i].coeffs[j]));
        polys += "]";
    }
    return polys + "]";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Apery-like approximants to p-adic zeta values and the 2-adic Catalan constant", "apery"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string case_name = "zeta-p2";
    unsigned k = 1;
    std::string format_name;
    std::optional<long> window_first, window_last;

    auto add_case = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--case", case_name, "case id")->check(CLI::IsMember(kCases));
        if (required)
            opt->required();
        sub->add_option("-k", k, "zeta cases: value zeta_p(1+2k)")->check(CLI::Range(1U, 16U));
    };

    // series
    auto* series_cmd = app.add_subcommand("series", "print a q-expansion");
    std::string form;
    unsigned weight = 0;
    std::optional<long> p_opt;
    std::size_t prec = 8;
    bool series_has_case = false;
    series_cmd->add_option("--case", case_name, "take the prime (and uniformizer) from a case")
        ->check(CLI::IsMember(kCases))
        ->each([&](const std::string&) { series_has_case = true; });
    series_cmd->add_option("-k", k, "zeta cases: value zeta_p(1+2k)")->check(CLI::Range(1U, 16U));
    series_cmd->add_option("--form", form, "e, estar, evil, eprime, f, f-lambert, fprime, uniformizer, delta")
        ->required()
        ->check(CLI::IsMember({"e", "estar", "evil", "eprime", "f", "f-lambert", "fprime", "uniformizer", "delta"}));
    series_cmd->add_option("--weight", weight, "2k for the E family, 2k+1 for F");
    series_cmd->add_option("--p", p_opt, "prime (overrides --case)");
    series_cmd->add_option("--prec", prec, "number of q-coefficients")->check(CLI::PositiveNumber);
    series_cmd->add_option("--format", format_name, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));

    // sequences
    auto* seq_cmd = app.add_subcommand("sequences", "tabulate a_n, b_n and 2a_n/b_n");
    std::size_t seq_prec = 0;
    add_case(seq_cmd, true);
    seq_cmd->add_option("-n", cfg.count, "number of rows (indices 0..n-1)");
    seq_cmd->add_option("--prec", seq_prec, "q-precision (default 2n+8)");
    seq_cmd->add_option("--format", format_name, "csv, json or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
    seq_cmd->add_option("-o,--output", cfg.output_path, "output file");

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "finite-range irrationality witness (JSONL)");
    add_case(cert_cmd, true);
    cert_cmd->add_option("-n", cfg.count, "number of sequence rows");
    cert_cmd->add_option("--bits", cfg.target_bits, "oracle target agreement exponent");
    cert_cmd->add_option("--window-first", window_first, "first index checked (default 3)");
    cert_cmd->add_option("--window-last", window_last, "last index checked (default n-1)");
    cert_cmd->add_option("--theta-required", cfg.theta_required, "exponent required of every certified row");
    cert_cmd->add_option("-o,--output", cfg.output_path, "output file");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "p-adic reference value by interpolation");
    std::string target = "zeta";
    long oracle_p = 2;
    long oracle_n = 1;
    oracle_cmd->add_option("--target", target, "zeta or catalan")->check(CLI::IsMember({"zeta", "catalan"}));
    oracle_cmd->add_option("--p", oracle_p, "prime for zeta_p");
    oracle_cmd->add_option("--n", oracle_n, "zeta_p(1+2n)")->check(CLI::Range(1L, 16L));
    oracle_cmd->add_option("--bits", cfg.target_bits, "target agreement exponent");
    oracle_cmd->add_option("--format", format_name, "json or plain")->check(CLI::IsMember({"json", "plain"}));

    // recurrence
    auto* rec_cmd = app.add_subcommand("recurrence", "verify or fit P-finite recurrences");
    std::string action;
    std::string which = "both";
    unsigned order = 2, degree = 2;
    add_case(rec_cmd, true);
    rec_cmd->add_option("action", action, "verify or fit")->required()->check(CLI::IsMember({"verify", "fit"}));
    rec_cmd->add_option("--sequence", which, "a, b or both")->check(CLI::IsMember({"a", "b", "both"}));
    rec_cmd->add_option("-n", cfg.count, "number of rows")->default_val(26);
    rec_cmd->add_option("--order", order, "fit: recurrence order");
    rec_cmd->add_option("--degree", degree, "fit: polynomial degree");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*series_cmd) {
            std::optional<CaseId> id;
            if (series_has_case)
                id = make_case(case_name, k);
            if (prec > 2 * max_terms() + 8)
                throw UsageError("--prec exceeds the cap");
            QSeries s = build_series(form, id, p_opt, weight, prec);
            JsonObject meta;
            meta.set_string("form", form).set_int("weight", weight);
            if (id)
                meta.set_string("case", case_label(*id));
            if (p_opt)
                meta.set_int("p", *p_opt);
            auto fmt = format_name.empty() ? OutputFormat::Plain : kFormats.at(format_name);
            out << render_series(s, fmt, meta);
            return kExitOk;
        }

        if (*seq_cmd) {
            cfg.id = make_case(case_name, k);
            check_count(cfg.count);
            if (seq_prec != 0 && seq_prec > 2 * max_terms() + 8)
                throw UsageError("--prec exceeds the cap");
            cfg.format = format_name.empty() ? OutputFormat::Csv : kFormats.at(format_name);
            auto table = sequences(cfg.id, cfg.count, seq_prec);
            integrality_report(table);
            emit(cfg, render_sequences(table, cfg.format), out);
            return kExitOk;
        }

        if (*cert_cmd) {
            cfg.id = make_case(case_name, k);
            check_count(cfg.count);
            if (cfg.count < 5)
                throw UsageError("certify needs at least 5 rows");
            if (cfg.target_bits < 1 || cfg.target_bits > kMaxBits)
                throw UsageError("--bits out of range");
            IndexWindow window{window_first.value_or(3), window_last.value_or(static_cast<long>(cfg.count) - 1)};
            if (window.first < 1 || window.last >= static_cast<long>(cfg.count) || window.first + 1 > window.last)
                throw UsageError("window must satisfy 1 <= first < last < n");

            run_identity_checks(cfg.id);
            auto table = sequences(cfg.id, cfg.count);
            integrality_report(table);

            OracleOptions opts;
            opts.target_bits = cfg.target_bits;
            const auto config = catalog(cfg.id);
            auto report = cfg.id.family == Family::CatalanP2 ? catalan_2adic_oracle_report(opts)
                                                              : zeta_p_oracle_report(config.p, cfg.id.k, opts);
            auto result = criterion_check(table, report.value, cfg.theta_required, window);

            std::string text;
            for (const auto& c : result.certificates)
                text += render_certificate(c);
            text += render_summary(result.summary);
            emit(cfg, text, out);
            return kExitOk;
        }

        if (*oracle_cmd) {
            if (cfg.target_bits < 1 || cfg.target_bits > kMaxBits)
                throw UsageError("--bits out of range");
            if (!is_prime(oracle_p))
                throw UsageError("--p must be prime");
            OracleOptions opts;
            opts.target_bits = cfg.target_bits;
            auto report = target == "catalan" ? catalan_2adic_oracle_report(opts)
                                              : zeta_p_oracle_report(Prime(oracle_p), oracle_n, opts);
            auto fmt = format_name.empty() ? OutputFormat::Json : kFormats.at(format_name);
            out << render_oracle(report, fmt);
            return kExitOk;
        }

        if (*rec_cmd) {
            cfg.id = make_case(case_name, k);
            check_count(cfg.count);
            auto table = sequences(cfg.id, cfg.count);
            std::vector<std::pair<std::string, std::vector<Rational>>> seqs;
            if (which != "b")
                seqs.emplace_back("a", table.a_values());
            if (which != "a")
                seqs.emplace_back("b", table.b_values());

            std::string text;
            for (const auto& [name, values] : seqs) {
                JsonObject obj;
                obj.set_string("case", case_label(cfg.id)).set_string("sequence", name).set_string("action", action);
                if (action == "verify") {
                    if (cfg.id.family != Family::CatalanP2)
                        throw UsageError("verify: only the catalan-p2 recurrence is known");
                    const long last = static_cast<long>(values.size()) - 2;
                    auto rep = verify(catalan_recurrence(), values, 2, last);
                    obj.set_string("recurrence", to_string(catalan_recurrence()))
                        .set_int("start", rep.start)
                        .set_int("end", rep.end)
                        .set_int("violation_count", static_cast<long>(rep.violations.size()));
                    std::string v = "[";
                    for (std::size_t i = 0; i < rep.violations.size(); ++i)
                        v += (i ? "," : "") + std::to_string(rep.violations[i]);
                    obj.set_raw("violations", v + "]");
                } else {
                    auto spec = fit(values, order, degree);
                    obj.set_int("order", order).set_int("degree", degree);
                    if (spec) {
                        obj.set_string("recurrence", to_string(*spec)).set_raw("coefficients", render_recurrence(*spec));
                        obj.set_bool("matches_known", cfg.id.family == Family::CatalanP2 && *spec == catalan_recurrence());
                    } else {
                        obj.set_null("recurrence");
                    }
                }
                text += obj.dump() + "\n";
            }
            out << text;
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IdentityViolation& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const IntegralityViolation& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const InconsistentValues& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace apery
