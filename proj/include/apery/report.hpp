#pragma once

#include "apery/diophantine.hpp"
#include "apery/expansion.hpp"
#include "apery/oracle.hpp"
#include "apery/qseries.hpp"
#include "apery/recurrence.hpp"

#include <map>
#include <string>

namespace apery {

/// Flat JSON object with keys emitted in sorted order. Values are stored
/// pre-rendered so the output is locale independent and byte-stable.
class JsonObject {
public:
    JsonObject& set_string(const std::string& key, const std::string& value);
    JsonObject& set_int(const std::string& key, long value);
    JsonObject& set_bool(const std::string& key, bool value);
    JsonObject& set_fixed(const std::string& key, double value);  // 10 decimals, null if not finite
    JsonObject& set_null(const std::string& key);
    JsonObject& set_raw(const std::string& key, std::string rendered);

    std::string dump() const;

private:
    std::map<std::string, std::string> fields_;
};

std::string json_quote(const std::string& s);
std::string format_fixed10(double value);

enum class OutputFormat { Json, Csv, Plain };

std::string render_series(const QSeries& s, OutputFormat fmt, const JsonObject& meta);

/// CSV columns: n,a_num,a_den,b,p_n,q_n (p_n, q_n empty on degenerate rows).
std::string render_sequences(const SequenceTable& t, OutputFormat fmt);

std::string render_certificate(const Certificate& c);
std::string render_summary(const CriterionSummary& s);

std::string render_oracle(const OracleReport& r, OutputFormat fmt);

} // namespace apery
