#pragma once

// Serialization of run reports: a human-readable text form, a fixed-column
// csv summary, and a json-lines stream (one object per case plus a summary
// object).  All three are byte-deterministic once the timestamp is dropped.

#include <string>

#include "qsocle/harness.hpp"

namespace qsocle {

enum class OutputFormat { Text, Csv, JsonLines };

/// Accepts "text", "csv", "json-lines"; throws on anything else.
OutputFormat format_from_string(const std::string& name);

std::string format_text(const RunReport& report, bool include_timestamp = true);
std::string format_csv(const RunReport& report, bool include_timestamp = true);
std::string format_json_lines(const RunReport& report, bool include_timestamp = true);

std::string format_report(const RunReport& report, OutputFormat format,
                          bool include_timestamp = true);

std::string to_string(CaseStatus status);

} // namespace qsocle
