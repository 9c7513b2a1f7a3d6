#include "qsocle/report_io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qsocle {

std::string render(bool v) { return v ? "true" : "false"; }

std::string render(const std::optional<bool>& v) {
  return v ? render(*v) : std::string("-");
}

std::string render(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

void CaseReport::add_check(const std::string& name, const std::string& predicted,
                           const std::string& oracle) {
  CheckRow row;
  row.name = name;
  row.predicted = predicted;
  row.oracle = oracle;
  row.agree = predicted == oracle;
  agreement = agreement && row.agree;
  checks.push_back(std::move(row));
}

std::string to_string(CaseStatus status) {
  switch (status) {
    case CaseStatus::Agree: return "agree";
    case CaseStatus::Disagree: return "disagree";
    case CaseStatus::Improper: return "improper";
    case CaseStatus::Skipped: return "skipped";
  }
  return "unknown";
}

OutputFormat format_from_string(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json-lines") return OutputFormat::JsonLines;
  throw std::invalid_argument("unknown output format: " + name);
}

namespace {

std::string csv_quote(const std::string& field) {
  bool needs_quote = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quote) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

// Column renderers for the csv summary.  Verdict columns are blank when the
// prediction declined to produce one (non-integral or improper case).
std::string csv_opt_bool(const std::optional<bool>& v) {
  return v ? render(*v) : std::string();
}

std::string csv_opt_int(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

} // namespace

std::string format_text(const RunReport& report, bool include_timestamp) {
  std::ostringstream out;
  out << report.tool << "\n";
  if (include_timestamp && report.generated_at)
    out << "generated: " << *report.generated_at << "\n";
  out << "\n";
  for (const CaseReport& c : report.cases) {
    out << "[" << to_string(c.status) << "] " << c.model << " " << c.case_tuple << "\n";
    out << "  rho=" << c.prediction.rho << " ell=" << c.prediction.ell
        << " integral=" << render(c.prediction.integral)
        << " improper=" << render(c.prediction.improper) << "\n";
    out << "  predicted: r=" << render(c.prediction.reduction_number)
        << " a(G)=" << render(c.prediction.g_a_invariant)
        << " rees_cm=" << render(c.prediction.rees_cm)
        << " g_gorenstein=" << render(c.prediction.g_gorenstein)
        << " rees_gorenstein=" << render(c.prediction.rees_gorenstein) << "\n";
    if (!c.ideal_generators.empty()) {
      out << "  generators (" << c.ideal_generators.size() << "):";
      // Large ideals are summarized; the first few generators identify them.
      std::size_t shown = std::min<std::size_t>(c.ideal_generators.size(), 12);
      for (std::size_t i = 0; i < shown; ++i) out << " " << c.ideal_generators[i];
      if (shown < c.ideal_generators.size()) out << " ...";
      out << "\n";
    }
    for (const CheckRow& row : c.checks) {
      out << "  " << (row.agree ? "ok  " : "FAIL") << " " << row.name
          << ": predicted=" << row.predicted << " oracle=" << row.oracle << "\n";
    }
    if (!c.error.empty()) out << "  error: " << c.error << "\n";
  }
  out << "\n";
  out << "cases=" << report.total() << " agreed=" << report.agreed
      << " disagreed=" << report.disagreed << " improper=" << report.improper
      << " skipped=" << report.skipped << " verdict="
      << (report.pass() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string format_csv(const RunReport& report, bool include_timestamp) {
  std::ostringstream out;
  if (include_timestamp && report.generated_at)
    out << "# generated: " << *report.generated_at << "\n";
  out << "model,case,rho,ell,integral_pred,integral_oracle,r_pred,r_oracle,"
         "g_gor_pred,g_gor_oracle,rees_cm_pred,rees_gor_pred,agreement\n";
  for (const CaseReport& c : report.cases) {
    out << csv_quote(c.model) << "," << csv_quote(c.case_tuple) << ","
        << c.prediction.rho << "," << c.prediction.ell << ","
        << render(c.prediction.integral) << ","
        << csv_opt_bool(c.integral_oracle) << ","
        << csv_opt_int(c.prediction.reduction_number) << ","
        << (c.r_oracle_ran ? csv_opt_int(c.r_oracle) : std::string()) << ","
        << csv_opt_bool(c.prediction.g_gorenstein) << ","
        << csv_opt_bool(c.g_gorenstein_oracle) << ","
        << csv_opt_bool(c.prediction.rees_cm) << ","
        << csv_opt_bool(c.prediction.rees_gorenstein) << ","
        << render(c.agreement) << "\n";
  }
  return out.str();
}

std::string format_json_lines(const RunReport& report, bool include_timestamp) {
  using nlohmann::json;
  std::ostringstream out;
  for (const CaseReport& c : report.cases) {
    json obj;
    obj["kind"] = "case";
    obj["model"] = c.model;
    obj["case"] = c.case_tuple;
    obj["status"] = to_string(c.status);
    json pred;
    pred["rho"] = c.prediction.rho;
    pred["ell"] = c.prediction.ell;
    pred["improper"] = c.prediction.improper;
    pred["integral"] = c.prediction.integral;
    if (c.prediction.reduction_number) pred["reduction_number"] = *c.prediction.reduction_number;
    if (c.prediction.g_a_invariant) pred["g_a_invariant"] = *c.prediction.g_a_invariant;
    if (c.prediction.rees_cm) pred["rees_cm"] = *c.prediction.rees_cm;
    if (c.prediction.g_gorenstein) pred["g_gorenstein"] = *c.prediction.g_gorenstein;
    if (c.prediction.rees_gorenstein) pred["rees_gorenstein"] = *c.prediction.rees_gorenstein;
    obj["prediction"] = pred;
    obj["oracles_run"] = c.oracles_run;
    if (c.oracles_run) {
      json oracle;
      if (c.integral_oracle) oracle["integral"] = *c.integral_oracle;
      if (c.r_oracle_ran) {
        if (c.r_oracle) oracle["reduction_number"] = *c.r_oracle;
        else oracle["reduction_number"] = nullptr;
      }
      if (c.g_gorenstein_oracle) oracle["g_gorenstein"] = *c.g_gorenstein_oracle;
      obj["oracle"] = oracle;
      obj["generators"] = c.ideal_generators;
    }
    json checks = json::array();
    for (const CheckRow& row : c.checks) {
      json r;
      r["name"] = row.name;
      r["predicted"] = row.predicted;
      r["oracle"] = row.oracle;
      r["agree"] = row.agree;
      checks.push_back(r);
    }
    obj["checks"] = checks;
    obj["agreement"] = c.agreement;
    if (!c.error.empty()) obj["error"] = c.error;
    out << obj.dump() << "\n";
  }
  json summary;
  summary["kind"] = "summary";
  summary["tool"] = report.tool;
  if (include_timestamp && report.generated_at)
    summary["generated_at"] = *report.generated_at;
  summary["cases"] = report.total();
  summary["agreed"] = report.agreed;
  summary["disagreed"] = report.disagreed;
  summary["improper"] = report.improper;
  summary["skipped"] = report.skipped;
  summary["pass"] = report.pass();
  out << summary.dump() << "\n";
  return out.str();
}

std::string format_report(const RunReport& report, OutputFormat format,
                          bool include_timestamp) {
  switch (format) {
    case OutputFormat::Text: return format_text(report, include_timestamp);
    case OutputFormat::Csv: return format_csv(report, include_timestamp);
    case OutputFormat::JsonLines: return format_json_lines(report, include_timestamp);
  }
  throw std::logic_error("unreachable output format");
}

} // namespace qsocle
