#include "apery/report.hpp"

#include "json.hpp"

#include <charconv>
#include <climits>
#include <cmath>
#include <sstream>

namespace apery {

std::string json_quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string format_fixed10(double value)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 10);
    return std::string(buf, res.ptr);
}

JsonObject& JsonObject::set_string(const std::string& key, const std::string& value)
{
    fields_[key] = json_quote(value);
    return *this;
}

JsonObject& JsonObject::set_int(const std::string& key, long value)
{
    fields_[key] = std::to_string(value);
    return *this;
}

JsonObject& JsonObject::set_bool(const std::string& key, bool value)
{
    fields_[key] = value ? "true" : "false";
    return *this;
}

JsonObject& JsonObject::set_fixed(const std::string& key, double value)
{
    fields_[key] = std::isfinite(value) ? format_fixed10(value) : "null";
    return *this;
}

JsonObject& JsonObject::set_null(const std::string& key)
{
    fields_[key] = "null";
    return *this;
}

JsonObject& JsonObject::set_raw(const std::string& key, std::string rendered)
{
    fields_[key] = std::move(rendered);
    return *this;
}

std::string JsonObject::dump() const
{
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : fields_) {
        if (!first)
            out += ",";
        first = false;
        out += json_quote(k);
        out += ":";
        out += v;
    }
    out += "}";
    return out;
}

namespace {

std::string string_array(const std::vector<std::string>& items)
{
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += ",";
        out += json_quote(items[i]);
    }
    return out + "]";
}

template <typename T>
std::string number_array(const std::vector<T>& items)
{
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(items[i]);
    }
    return out + "]";
}

void set_exponent(JsonObject& obj, const std::string& key, long v)
{
    if (v == LONG_MAX || v == LONG_MIN)
        obj.set_null(key);
    else
        obj.set_int(key, v);
}

} // namespace

std::string render_series(const QSeries& s, OutputFormat fmt, const JsonObject& meta)
{
    std::vector<std::string> coeffs;
    for (const auto& c : s.coeffs())
        coeffs.push_back(to_string(c));

    std::ostringstream out;
    switch (fmt) {
    case OutputFormat::Json: {
        JsonObject obj = meta;
        obj.set_raw("coefficients", string_array(coeffs));
        obj.set_int("prec", static_cast<long>(s.prec()));
        out << obj.dump() << "\n";
        break;
    }
    case OutputFormat::Csv:
        out << "n,coefficient\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            out << i << "," << coeffs[i] << "\n";
        break;
    case OutputFormat::Plain:
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            out << (i ? ", " : "") << coeffs[i];
        out << "\n";
        break;
    }
    return out.str();
}

std::string render_sequences(const SequenceTable& t, OutputFormat fmt)
{
    std::ostringstream out;
    switch (fmt) {
    case OutputFormat::Csv:
        out << "n,a_num,a_den,b,p_n,q_n\n";
        for (const auto& r : t.rows) {
            out << r.n << "," << r.a.get_num().get_str() << "," << r.a.get_den().get_str() << ","
                << to_string(r.b) << ",";
            if (!r.degenerate())
                out << r.p->get_str() << "," << r.q->get_str();
            else
                out << ",";
            out << "\n";
        }
        break;
    case OutputFormat::Json: {
        out << "[";
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const auto& r = t.rows[i];
            JsonObject obj;
            obj.set_int("n", r.n)
                .set_string("a_num", r.a.get_num().get_str())
                .set_string("a_den", r.a.get_den().get_str())
                .set_string("b", to_string(r.b));
            if (r.degenerate()) {
                obj.set_null("p_n").set_null("q_n");
            } else {
                obj.set_string("p_n", r.p->get_str()).set_string("q_n", r.q->get_str());
            }
            out << (i ? "," : "") << obj.dump();
        }
        out << "]\n";
        break;
    }
    case OutputFormat::Plain:
        out << "# " << case_label(t.id) << " (sign_a " << t.sign_a << ", sign_b " << t.sign_b << ")\n";
        for (const auto& r : t.rows) {
            out << r.n << "  a=" << to_string(r.a) << "  b=" << to_string(r.b);
            if (!r.degenerate())
                out << "  2a/b=" << r.p->get_str() << "/" << r.q->get_str();
            out << "\n";
        }
        break;
    }
    return out.str();
}

std::string render_certificate(const Certificate& c)
{
    JsonObject obj;
    obj.set_string("case", case_label(c.id))
        .set_int("n", c.n)
        .set_string("p_n", c.p_n.get_str())
        .set_string("q_n", c.q_n.get_str())
        .set_fixed("log_max_size", c.log_max_size)
        .set_fixed("implied_exponent", c.status == RowStatus::ZeroGap ? NAN : c.implied_exponent)
        .set_fixed("theta_closed", c.theta_closed)
        .set_int("sign", c.sign)
        .set_bool("certified", c.certified)
        .set_string("status", to_string(c.status));
    set_exponent(obj, "valuation_gap", c.valuation_gap);
    return obj.dump() + "\n";
}

std::string render_summary(const CriterionSummary& s)
{
    JsonObject obj;
    obj.set_bool("summary", true)
        .set_string("case", case_label(s.id))
        .set_string("verdict", to_string(s.verdict))
        .set_fixed("theta_closed", s.theta_closed)
        .set_fixed("theta_required", s.theta_required)
        .set_fixed("best_implied_exponent", s.best_implied_exponent)
        .set_int("certified_rows", s.certified_rows)
        .set_int("failing_rows", s.failing_rows)
        .set_int("sign", s.sign)
        .set_int("window_first", s.window.first)
        .set_int("window_last", s.window.last)
        .set_string("note", "finite-range witness computation, not a proof");
    set_exponent(obj, "oracle_exponent", s.oracle_exponent);
    return obj.dump() + "\n";
}

std::string render_oracle(const OracleReport& r, OutputFormat fmt)
{
    const auto digits = r.value.certified_digits(64);
    std::vector<long> exponents;
    std::vector<long> digit_values;
    for (const auto& d : digits) {
        exponents.push_back(d.exponent);
        digit_values.push_back(d.digit);
    }
    const std::string target = r.target == OracleTarget::Catalan
        ? "catalan"
        : "zeta_" + std::to_string(r.p.value()) + "(" + std::to_string(2 * r.n + 1) + ")";

    std::ostringstream out;
    if (fmt == OutputFormat::Plain) {
        out << target << "\n"
            << "representative " << to_string(r.value.representative) << "\n"
            << "agreement_exponent " << r.value.agreement_exponent << "\n"
            << "reached_target " << (r.reached_target ? "true" : "false") << "\n"
            << "digit_exponents";
        for (long e : exponents)
            out << " " << e;
        out << "\n";
        for (const auto& s : r.strategies)
            out << "strategy " << s.name << " levels " << s.levels.size() << " certified "
                << s.value.agreement_exponent << "\n";
        return out.str();
    }

    std::vector<std::string> strategies;
    for (const auto& s : r.strategies) {
        JsonObject so;
        so.set_string("name", s.name).set_int("levels", static_cast<long>(s.levels.size()));
        set_exponent(so, "agreement_exponent", s.value.agreement_exponent);
        so.set_int("max_weight", s.levels.empty() ? 0 : static_cast<long>(s.levels.back().max_weight));
        strategies.push_back(so.dump());
    }
    std::string strategies_json = "[";
    for (std::size_t i = 0; i < strategies.size(); ++i)
        strategies_json += (i ? "," : "") + strategies[i];
    strategies_json += "]";

    JsonObject obj;
    obj.set_string("target", target)
        .set_int("p", r.p.value())
        .set_string("representative", to_string(r.value.representative))
        .set_int("agreement_exponent", r.value.agreement_exponent)
        .set_int("relative_precision", r.value.relative_precision())
        .set_bool("reached_target", r.reached_target)
        .set_raw("digit_exponents", number_array(exponents))
        .set_raw("digits", number_array(digit_values))
        .set_raw("strategies", strategies_json)
        .set_string("note", "precision certified by stabilization of successive refinements");
    out << obj.dump() << "\n";
    return out.str();
}

} // namespace apery
