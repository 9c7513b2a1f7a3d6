// Tests for the sweep harness and the report serializers: case enumeration,
// determinism across runs and worker counts, status accounting, and the
// text / csv / json-lines output schemas.

#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsocle/harness.hpp"
#include "qsocle/report_io.hpp"

using namespace qsocle;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    lines.push_back(line);
  return lines;
}

std::vector<std::string> tuples_of(const std::vector<CaseDescriptor>& cases) {
  std::vector<std::string> out;
  for (const auto& c : cases)
    out.push_back(c.tuple());
  return out;
}

} // namespace

TEST_SUITE("harness") {

TEST_CASE("model names round-trip and reject unknowns") {
  for (Model m : {Model::Regular, Model::Semigroup, Model::PredictorOnly})
    CHECK(model_from_string(to_string(m)) == m);
  CHECK(to_string(Model::Semigroup) == "semigroup");
  CHECK_THROWS_AS(model_from_string("polynomial"), std::invalid_argument);
  CHECK_THROWS_AS(model_from_string(""), std::invalid_argument);
}

TEST_CASE("rendering helpers") {
  CHECK(render(true) == "true");
  CHECK(render(false) == "false");
  CHECK(render(std::optional<bool>{}) == "-");
  CHECK(render(std::optional<bool>{true}) == "true");
  CHECK(render(std::optional<int>{}) == "none");
  CHECK(render(std::optional<int>{7}) == "7");
  CHECK(to_string(CaseStatus::Agree) == "agree");
  CHECK(to_string(CaseStatus::Disagree) == "disagree");
  CHECK(to_string(CaseStatus::Improper) == "improper");
  CHECK(to_string(CaseStatus::Skipped) == "skipped");
}

TEST_CASE("tiny regular sweep enumerates cases in lexicographic order") {
  SweepSpec spec;
  spec.dims = {2};
  spec.a_min = 1;
  spec.a_max = 2;
  // q runs up to rho of each tuple; (1,1) has rho = 0 and contributes nothing.
  const auto cases = enumerate_cases(spec);
  const std::vector<std::string> expected = {
      "d=2 a=(1,2) q=1",
      "d=2 a=(2,1) q=1",
      "d=2 a=(2,2) q=1",
      "d=2 a=(2,2) q=2",
  };
  CHECK(tuples_of(cases) == expected);
  for (const auto& c : cases)
    CHECK(c.model == Model::Regular);
}

TEST_CASE("dimension list is deduplicated and sorted") {
  SweepSpec spec;
  spec.dims = {3, 2, 2};
  spec.a_min = 2;
  spec.a_max = 2;
  spec.q_max = 1;
  const auto cases = enumerate_cases(spec);
  const std::vector<std::string> expected = {
      "d=2 a=(2,2) q=1",
      "d=3 a=(2,2,2) q=1",
  };
  CHECK(tuples_of(cases) == expected);

  SweepSpec bad = spec;
  bad.dims = {0};
  CHECK_THROWS_AS(enumerate_cases(bad), std::invalid_argument);
}

TEST_CASE("tiny semigroup sweep enumerates coprime pairs only") {
  SweepSpec spec;
  spec.model = Model::Semigroup;
  spec.sg_a_min = 2;
  spec.sg_b_max = 4;
  spec.n_min = 1;
  spec.n_max = 1;
  // (2,4) is skipped (gcd 2); rho = a + n - 2 bounds q.
  const auto cases = enumerate_cases(spec);
  const std::vector<std::string> expected = {
      "a=2 b=3 n=1 q=1",
      "a=3 b=4 n=1 q=1",
      "a=3 b=4 n=1 q=2",
  };
  CHECK(tuples_of(cases) == expected);
}

TEST_CASE("predictor-only sweep threads the invariant through each tuple") {
  SweepSpec spec;
  spec.model = Model::PredictorOnly;
  spec.dims = {2};
  spec.a_min = 2;
  spec.a_max = 2;
  spec.gm_a_invariant = -1;
  // rho = 2 + 2 + (-1) = 3, so q runs 1..3.
  const auto cases = enumerate_cases(spec);
  REQUIRE(cases.size() == 3);
  CHECK(cases.front().tuple() == "d=2 a=(2,2) q=1 gmA=-1");
  CHECK(cases.back().tuple() == "d=2 a=(2,2) q=3 gmA=-1");
  for (const auto& c : cases) {
    REQUIRE(c.gm_a_invariant.has_value());
    CHECK(*c.gm_a_invariant == -1);
  }
}

TEST_CASE("sweep validation rejects bad parameters") {
  SweepSpec no_invariant;
  no_invariant.model = Model::PredictorOnly;
  CHECK_THROWS_AS(no_invariant.validate(), std::invalid_argument);

  SweepSpec bad_q;
  bad_q.q_min = 0;
  CHECK_THROWS_AS(bad_q.validate(), std::invalid_argument);

  SweepSpec bad_sg;
  bad_sg.model = Model::Semigroup;
  bad_sg.sg_a_min = 1;
  CHECK_THROWS_AS(bad_sg.validate(), std::invalid_argument);
}

TEST_CASE("run_case dispatches every model") {
  SUBCASE("regular") {
    CaseDescriptor c;
    c.a = {3, 3};
    c.q = 2;
    const CaseReport r = run_case(c, {});
    CHECK(r.model == "regular");
    CHECK(r.status == CaseStatus::Agree);
    CHECK(r.oracles_run);
  }
  SUBCASE("semigroup") {
    CaseDescriptor c;
    c.model = Model::Semigroup;
    c.sg_a = 3;
    c.sg_b = 5;
    c.sg_n = 2;
    c.q = 2;
    const CaseReport r = run_case(c, {});
    CHECK(r.model == "semigroup");
    CHECK(r.case_tuple == "a=3 b=5 n=2 q=2");
    CHECK(r.status == CaseStatus::Agree);
  }
  SUBCASE("predictor-only") {
    CaseDescriptor c;
    c.model = Model::PredictorOnly;
    c.a = {2, 4};
    c.q = 2;
    c.gm_a_invariant = -2;
    const CaseReport r = run_case(c, {});
    CHECK(r.model == "predictor-only");
    CHECK_FALSE(r.oracles_run);
    CHECK(r.checks.empty());
    CHECK(r.status == CaseStatus::Agree);
  }
}

TEST_CASE("run_case reports failures as skipped instead of throwing") {
  SUBCASE("box cap exceeded") {
    CaseDescriptor c;
    c.a = {2, 2, 2};
    c.q = 2;
    AnalyzeOptions options;
    options.box_cap = 4; // the (2,2,2) box needs 27 cells
    const CaseReport r = run_case(c, options);
    CHECK(r.status == CaseStatus::Skipped);
    CHECK(r.model == "regular");
    CHECK(r.case_tuple == "d=3 a=(2,2,2) q=2");
    CHECK_FALSE(r.error.empty());
  }
  SUBCASE("invalid case parameters") {
    CaseDescriptor c;
    c.a = {2, 2};
    c.q = 0;
    const CaseReport r = run_case(c, {});
    CHECK(r.status == CaseStatus::Skipped);
    CHECK_FALSE(r.error.empty());
  }
  SUBCASE("predictor-only without the invariant") {
    CaseDescriptor c;
    c.model = Model::PredictorOnly;
    c.a = {2, 2};
    c.q = 1;
    const CaseReport r = run_case(c, {});
    CHECK(r.status == CaseStatus::Skipped);
    CHECK_FALSE(r.error.empty());
  }
}

TEST_CASE("sweeps are deterministic and worker-count independent") {
  SweepSpec spec;
  spec.dims = {2};
  spec.a_min = 1;
  spec.a_max = 3;

  const RunReport serial_a = run_sweep(spec, 1);
  const RunReport serial_b = run_sweep(spec, 1);
  const RunReport threaded = run_sweep(spec, 4);

  CHECK(serial_a.total() == 18); // hand count over a in [1,3]^2, q <= rho
  CHECK(serial_a.pass());
  CHECK(serial_a.disagreed == 0);
  CHECK(serial_a.skipped == 0);

  const std::string csv_a = format_csv(serial_a, false);
  CHECK(csv_a == format_csv(serial_b, false));
  CHECK(csv_a == format_csv(threaded, false));
  CHECK(format_json_lines(serial_a, false) == format_json_lines(threaded, false));
}

TEST_CASE("a zero time budget skips every case") {
  SweepSpec spec;
  spec.dims = {2};
  spec.a_min = 2;
  spec.a_max = 3;
  spec.time_budget_s = 0.0;
  const RunReport report = run_sweep(spec, 2);
  CHECK(report.total() > 0);
  CHECK(report.skipped == report.total());
  CHECK(report.agreed == 0);
  for (const auto& c : report.cases) {
    CHECK(c.status == CaseStatus::Skipped);
    CHECK(c.error == "time budget exhausted");
  }
}

TEST_CASE("single-case reports carry the tool banner and counts") {
  CaseDescriptor c;
  c.a = {2, 2, 2};
  c.q = 3;
  RunReport run = single_case_report(run_case(c, {}));
  CHECK(run.total() == 1);
  CHECK(run.agreed == 1);
  CHECK(run.pass());
  CHECK(run.tool.rfind("qsocle ", 0) == 0);
  CHECK(run.generated_at.has_value());
}

TEST_CASE("add_check flips agreement exactly on mismatch") {
  CaseReport fake;
  fake.add_check("first", "1", "1");
  CHECK(fake.agreement);
  fake.add_check("second", "true", "false");
  CHECK_FALSE(fake.agreement);
  CHECK_FALSE(fake.checks.back().agree);
  fake.status = CaseStatus::Disagree;

  const RunReport run = single_case_report(fake);
  CHECK(run.disagreed == 1);
  CHECK_FALSE(run.pass());
}

TEST_CASE("refresh_counts recomputes the summary from case statuses") {
  RunReport run;
  run.cases.resize(4);
  run.cases[0].status = CaseStatus::Agree;
  run.cases[1].status = CaseStatus::Improper;
  run.cases[2].status = CaseStatus::Skipped;
  run.cases[3].status = CaseStatus::Disagree;
  refresh_counts(run);
  CHECK(run.agreed == 1);
  CHECK(run.improper == 1);
  CHECK(run.skipped == 1);
  CHECK(run.disagreed == 1);
  CHECK(run.total() == 4);
  CHECK_FALSE(run.pass());
}

TEST_CASE("csv output matches the stable schema") {
  // q = 2 gives ell = 2 >= max a: integral, every verdict column populated.
  // q = 3 gives ell = 1 < 2: not integral, verdicts suppressed and no
  // stabilizing reduction exists, so both r columns read "none".
  CaseDescriptor integral;
  integral.a = {2, 2, 2};
  integral.q = 2;
  CaseDescriptor fractional = integral;
  fractional.q = 3;
  RunReport run;
  run.tool = "test";
  run.cases.push_back(run_case(integral, {}));
  run.cases.push_back(run_case(fractional, {}));
  refresh_counts(run);

  const auto lines = split_lines(format_csv(run, false));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        "model,case,rho,ell,integral_pred,integral_oracle,r_pred,r_oracle,"
        "g_gor_pred,g_gor_oracle,rees_cm_pred,rees_gor_pred,agreement");
  // The tuple contains commas, so the field is quoted.
  CHECK(lines[1] ==
        "regular,\"d=3 a=(2,2,2) q=2\",3,2,true,true,1,1,true,true,true,true,true");
  CHECK(lines[2] ==
        "regular,\"d=3 a=(2,2,2) q=3\",3,1,false,false,none,none,,,,,true");

  const auto stamped = split_lines(format_csv(run, true));
  REQUIRE(stamped.size() == 3); // no generated_at was set, so no comment line
  run.generated_at = "2000-01-01T00:00:00Z";
  const auto dated = split_lines(format_csv(run, true));
  REQUIRE(dated.size() == 4);
  CHECK(dated[0] == "# generated: 2000-01-01T00:00:00Z");
  CHECK(dated[1] == lines[0]);
}

TEST_CASE("csv leaves suppressed verdict columns blank on improper cases") {
  CaseDescriptor c;
  c.a = {2, 2};
  c.q = 5; // rho = 2, so the colon is the unit ideal
  const RunReport run = single_case_report(run_case(c, {}));
  const auto lines = split_lines(format_csv(run, false));
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == "regular,\"d=2 a=(2,2) q=5\",2,-2,false,false,none,none,,,,,true");
}

TEST_CASE("json lines parse back and agree with the run") {
  SweepSpec spec;
  spec.dims = {2};
  spec.a_min = 2;
  spec.a_max = 2; // (2,2) with q in {1, 2}
  const RunReport run = run_sweep(spec, 1);
  REQUIRE(run.total() == 2);

  const auto lines = split_lines(format_json_lines(run, false));
  REQUIRE(lines.size() == 3);

  const auto first = nlohmann::json::parse(lines[0]);
  CHECK(first.at("kind") == "case");
  CHECK(first.at("model") == "regular");
  CHECK(first.at("case") == "d=2 a=(2,2) q=1");
  CHECK(first.at("status") == "agree");
  CHECK(first.at("prediction").at("rho") == 2);
  CHECK(first.at("prediction").at("ell") == 2);
  CHECK(first.at("prediction").at("integral") == true);
  CHECK(first.at("oracles_run") == true);
  CHECK(first.at("oracle").at("reduction_number") == 1);
  CHECK(first.at("agreement") == true);
  CHECK(first.at("checks").is_array());
  CHECK_FALSE(first.at("checks").empty());
  for (const auto& row : first.at("checks"))
    CHECK(row.at("agree") == true);
  CHECK(first.at("generators").is_array());

  const auto summary = nlohmann::json::parse(lines.back());
  CHECK(summary.at("kind") == "summary");
  CHECK(summary.at("cases") == 2);
  CHECK(summary.at("agreed") == 2);
  CHECK(summary.at("pass") == true);
  CHECK_FALSE(summary.contains("generated_at"));

  const auto stamped = split_lines(format_json_lines(run, true));
  CHECK(nlohmann::json::parse(stamped.back()).contains("generated_at"));
}

TEST_CASE("text output names each verdict") {
  CaseDescriptor c;
  c.a = {3, 3};
  c.q = 2;
  const RunReport run = single_case_report(run_case(c, {}));
  const std::string text = format_text(run, false);
  CHECK(text.find("[agree] regular d=2 a=(3,3) q=2") != std::string::npos);
  CHECK(text.find("rho=4 ell=3") != std::string::npos);
  CHECK(text.find("ok   reduction_number: predicted=1 oracle=1") != std::string::npos);
  CHECK(text.find("verdict=pass") != std::string::npos);
  CHECK(text.find("generated:") == std::string::npos);
  CHECK(format_text(run, true).find("generated: ") != std::string::npos);
}

TEST_CASE("format_report dispatches on the format enum") {
  CaseDescriptor c;
  c.a = {2, 2};
  c.q = 1;
  const RunReport run = single_case_report(run_case(c, {}));
  CHECK(format_report(run, OutputFormat::Text, false) == format_text(run, false));
  CHECK(format_report(run, OutputFormat::Csv, false) == format_csv(run, false));
  CHECK(format_report(run, OutputFormat::JsonLines, false) == format_json_lines(run, false));

  CHECK(format_from_string("text") == OutputFormat::Text);
  CHECK(format_from_string("csv") == OutputFormat::Csv);
  CHECK(format_from_string("json-lines") == OutputFormat::JsonLines);
  CHECK_THROWS_AS(format_from_string("xml"), std::invalid_argument);
}

} // TEST_SUITE
