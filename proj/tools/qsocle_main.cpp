// Command-line front end: analyze one case, sweep parameter ranges, query
// integral closures, or run the built-in verification suite.
//
// Exit codes: 0 all checks agreed; 1 at least one disagreement; 2 usage or
// I/O error; 3 at least one case skipped by a cap while --strict is set.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qsocle/acceptance.hpp"
#include "qsocle/closure.hpp"
#include "qsocle/harness.hpp"
#include "qsocle/monomial.hpp"
#include "qsocle/quasisocle.hpp"
#include "qsocle/report_io.hpp"
#include "qsocle/version.hpp"

namespace {

using namespace qsocle;

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
  bool strict = false;
  bool no_timestamp = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write the report to this file instead of stdout");
  cmd->add_flag("--strict", opts.strict, "Exit 3 when any case was skipped by a cap");
  cmd->add_flag("--no-timestamp", opts.no_timestamp, "Suppress the generated-at line");
}

/// Returns 0 on success, 2 when the file cannot be written.
int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

int finish_run(const RunReport& report, const OutputOptions& opts) {
  std::string text =
      format_report(report, format_from_string(opts.format), !opts.no_timestamp);
  if (int io = emit(text, opts.out_path); io != 0) return io;
  if (report.disagreed > 0) return 1;
  if (opts.strict && report.skipped > 0) return 3;
  return 0;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

CaseDescriptor descriptor_from_json(const nlohmann::json& j) {
  CaseDescriptor d;
  d.model = model_from_string(j.value("model", std::string("regular")));
  if (d.model == Model::Semigroup) {
    d.sg_a = j.at("a").get<int>();
    d.sg_b = j.at("b").get<int>();
    d.sg_n = j.value("n", 1);
  } else {
    d.a = j.at("a").get<std::vector<int>>();
    if (j.contains("gm_a_invariant"))
      d.gm_a_invariant = j.at("gm_a_invariant").get<int>();
  }
  d.q = j.at("q").get<int>();
  return d;
}

SweepSpec sweep_from_json(const nlohmann::json& j) {
  SweepSpec s;
  s.model = model_from_string(j.value("model", std::string("regular")));
  s.dims = j.value("dims", s.dims);
  s.a_min = j.value("a_min", s.a_min);
  s.a_max = j.value("a_max", s.a_max);
  s.sg_a_min = j.value("sg_a_min", s.sg_a_min);
  s.sg_b_max = j.value("sg_b_max", s.sg_b_max);
  s.n_min = j.value("n_min", s.n_min);
  s.n_max = j.value("n_max", s.n_max);
  s.q_min = j.value("q_min", s.q_min);
  if (j.contains("q_max") && !j.at("q_max").is_null())
    s.q_max = j.at("q_max").get<int>();
  if (j.contains("gm_a_invariant") && !j.at("gm_a_invariant").is_null())
    s.gm_a_invariant = j.at("gm_a_invariant").get<int>();
  if (j.contains("box_cap")) s.box_cap = j.at("box_cap").get<std::size_t>();
  if (j.contains("reduction_n_max") && !j.at("reduction_n_max").is_null())
    s.reduction_n_max = j.at("reduction_n_max").get<int>();
  if (j.contains("time_budget_s") && !j.at("time_budget_s").is_null())
    s.time_budget_s = j.at("time_budget_s").get<double>();
  return s;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty entry in list: " + text);
    values.push_back(std::stoi(token));
  }
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

MonomialIdeal parse_generator_rows(const std::string& text) {
  std::vector<ExponentVector> gens;
  std::stringstream in(text);
  std::string row;
  while (std::getline(in, row, ';')) {
    if (row.empty()) continue;
    gens.emplace_back(parse_int_list(row));
  }
  if (gens.empty()) throw std::invalid_argument("no generators in: " + text);
  return MonomialIdeal(gens.front().dim(), gens);
}

struct AnalyzeArgs {
  std::string model = "regular";
  std::vector<int> a;
  int b = 0;
  int n = 1;
  int q = 1;
  int gm_a_invariant = 0;
  bool gm_set = false;
  std::string file;
  std::size_t box_cap = 0;
  bool box_cap_set = false;
  int reduction_n_max = 0;
  bool reduction_set = false;
  OutputOptions out;
};

int run_analyze(const AnalyzeArgs& args) {
  CaseDescriptor d;
  if (!args.file.empty()) {
    d = descriptor_from_json(load_json_file(args.file));
  } else {
    d.model = model_from_string(args.model);
    d.q = args.q;
    if (d.model == Model::Semigroup) {
      if (args.a.size() != 1 || args.b <= 0)
        throw CLI::ValidationError(
            "--model semigroup needs --a A (one value) and --b B");
      d.sg_a = args.a.front();
      d.sg_b = args.b;
      d.sg_n = args.n;
    } else {
      if (args.a.empty())
        throw CLI::ValidationError("--a is required (e.g. --a 2,2,2)");
      d.a = args.a;
      if (args.gm_set) d.gm_a_invariant = args.gm_a_invariant;
      if (d.model == Model::PredictorOnly && !args.gm_set)
        throw CLI::ValidationError(
            "--model predictor-only needs --gm-a-invariant");
    }
  }

  AnalyzeOptions options;
  if (args.box_cap_set) options.box_cap = args.box_cap;
  if (args.reduction_set) options.reduction_n_max = args.reduction_n_max;

  return finish_run(single_case_report(run_case(d, options)), args.out);
}

struct SweepArgs {
  std::string model = "regular";
  std::vector<int> dims = {2, 3};
  int a_min = 1;
  int a_max = 4;
  int sg_a_min = 2;
  int sg_b_max = 13;
  int n_min = 1;
  int n_max = 4;
  int q_min = 1;
  int q_max = 0;
  bool q_max_set = false;
  int gm_a_invariant = 0;
  bool gm_set = false;
  std::string file;
  std::size_t box_cap = 0;
  bool box_cap_set = false;
  int reduction_n_max = 0;
  bool reduction_set = false;
  double time_budget_s = 0.0;
  bool budget_set = false;
  int workers = 1;
  OutputOptions out;
};

int run_sweep_cmd(const SweepArgs& args) {
  SweepSpec spec;
  if (!args.file.empty()) {
    spec = sweep_from_json(load_json_file(args.file));
  } else {
    spec.model = model_from_string(args.model);
    spec.dims = args.dims;
    spec.a_min = args.a_min;
    spec.a_max = args.a_max;
    spec.sg_a_min = args.sg_a_min;
    spec.sg_b_max = args.sg_b_max;
    spec.n_min = args.n_min;
    spec.n_max = args.n_max;
    spec.q_min = args.q_min;
    if (args.q_max_set) spec.q_max = args.q_max;
    if (args.gm_set) spec.gm_a_invariant = args.gm_a_invariant;
    if (args.box_cap_set) spec.box_cap = args.box_cap;
    if (args.reduction_set) spec.reduction_n_max = args.reduction_n_max;
    if (args.budget_set) spec.time_budget_s = args.time_budget_s;
  }
  spec.validate();
  return finish_run(run_sweep(spec, args.workers), args.out);
}

struct ClosureArgs {
  std::vector<int> a;
  std::string gens;
  std::vector<std::string> points;
  bool show_generators = false;
  OutputOptions out;
};

int run_closure(const ClosureArgs& args) {
  bool diagonal_mode = !args.a.empty();
  bool general_mode = !args.gens.empty();
  if (diagonal_mode == general_mode)
    throw CLI::ValidationError("pass exactly one of --a (diagonal exponents) or --gens");
  if (args.out.format == "csv")
    throw CLI::ValidationError("closure queries support text and json-lines only");
  bool json_mode = args.out.format == "json-lines";

  std::ostringstream text;
  if (diagonal_mode) {
    MonomialIdeal closed = diagonal_closure(args.a);
    if (args.show_generators || args.points.empty()) {
      if (json_mode) {
        nlohmann::json obj;
        obj["kind"] = "generators";
        std::vector<std::string> gens;
        for (const auto& g : closed.generators()) gens.push_back(g.to_tuple_string());
        obj["generators"] = gens;
        text << obj.dump() << "\n";
      } else {
        text << "closure" << " = " << closed.to_string() << "\n";
      }
    }
    for (const std::string& p : args.points) {
      ExponentVector alpha(parse_int_list(p));
      bool member = diagonal_closure_contains(args.a, alpha);
      if (json_mode) {
        nlohmann::json obj;
        obj["kind"] = "membership";
        obj["point"] = parse_int_list(p);
        obj["member"] = member;
        text << obj.dump() << "\n";
      } else {
        text << alpha.to_tuple_string() << " in closure = " << render(member) << "\n";
      }
    }
  } else {
    if (args.show_generators)
      throw CLI::ValidationError(
          "--generators needs --a; closures are enumerated for diagonal ideals only");
    if (args.points.empty())
      throw CLI::ValidationError("--gens mode needs at least one --point");
    MonomialIdeal J = parse_generator_rows(args.gens);
    for (const std::string& p : args.points) {
      ExponentVector alpha(parse_int_list(p));
      bool member = newton_polyhedron_contains(J, alpha);
      if (json_mode) {
        nlohmann::json obj;
        obj["kind"] = "membership";
        obj["point"] = parse_int_list(p);
        obj["member"] = member;
        text << obj.dump() << "\n";
      } else {
        text << alpha.to_tuple_string() << " in closure = " << render(member) << "\n";
      }
    }
  }
  return emit(text.str(), args.out.out_path);
}

struct SemigroupArgs {
  int a = 0;
  int b = 0;
  int n = 1;
  int q = 1;
  int reduction_n_max = 0;
  bool reduction_set = false;
  OutputOptions out;
};

int run_semigroup(const SemigroupArgs& args) {
  CaseDescriptor d;
  d.model = Model::Semigroup;
  d.sg_a = args.a;
  d.sg_b = args.b;
  d.sg_n = args.n;
  d.q = args.q;
  AnalyzeOptions options;
  if (args.reduction_set) options.reduction_n_max = args.reduction_n_max;
  return finish_run(single_case_report(run_case(d, options)), args.out);
}

struct VerifyArgs {
  int workers = 0;
  std::string out_path;
};

int run_verify(const VerifyArgs& args) {
  std::vector<CriterionResult> results = run_acceptance(args.workers);
  std::ostringstream text;
  int passed = 0;
  for (const CriterionResult& r : results) {
    text << format_criterion_line(r) << "\n";
    if (r.passed) ++passed;
  }
  text << "verification: " << passed << "/" << results.size() << " criteria passed\n";
  if (int io = emit(text.str(), args.out_path); io != 0) return io;
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-socle ideal calculator: closed-form predictions versus "
               "exact monomial and numerical-semigroup oracles"};
  app.set_version_flag("--version", std::string(tool_name) + " " + std::string(version));
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "Analyze one case from flags or a JSON descriptor file");
  analyze_cmd->add_option("--model", analyze_args.model, "regular, semigroup or predictor-only")
      ->check(CLI::IsMember({"regular", "semigroup", "predictor-only"}))
      ->capture_default_str();
  analyze_cmd->add_option("--a", analyze_args.a,
                          "Exponents a_1,...,a_d (regular) or the generator a (semigroup)")
      ->delimiter(',');
  analyze_cmd->add_option("--b", analyze_args.b, "Second semigroup generator");
  analyze_cmd->add_option("--n", analyze_args.n, "Semigroup parameter exponent: Q = (t^{a n})");
  analyze_cmd->add_option("--q", analyze_args.q, "Socle power: I = Q : m^q");
  analyze_cmd->add_option("--gm-a-invariant", analyze_args.gm_a_invariant,
                          "a-invariant of the tangent cone (predictor-only model)")
      ->each([&analyze_args](const std::string&) { analyze_args.gm_set = true; });
  analyze_cmd->add_option("--file", analyze_args.file, "JSON case descriptor");
  analyze_cmd->add_option("--box-cap", analyze_args.box_cap, "Box point cap override")
      ->each([&analyze_args](const std::string&) { analyze_args.box_cap_set = true; });
  analyze_cmd->add_option("--reduction-n-max", analyze_args.reduction_n_max,
                          "Cap for the reduction-number search")
      ->each([&analyze_args](const std::string&) { analyze_args.reduction_set = true; });
  add_output_flags(analyze_cmd, analyze_args.out);

  SweepArgs sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Run every case in the given parameter ranges");
  sweep_cmd->add_option("--model", sweep_args.model, "regular, semigroup or predictor-only")
      ->check(CLI::IsMember({"regular", "semigroup", "predictor-only"}))
      ->capture_default_str();
  sweep_cmd->add_option("--dims", sweep_args.dims, "Dimensions to sweep")->delimiter(',');
  sweep_cmd->add_option("--a-min", sweep_args.a_min, "Smallest exponent")->capture_default_str();
  sweep_cmd->add_option("--a-max", sweep_args.a_max, "Largest exponent")->capture_default_str();
  sweep_cmd->add_option("--sg-a-min", sweep_args.sg_a_min, "Smallest semigroup generator")
      ->capture_default_str();
  sweep_cmd->add_option("--sg-b-max", sweep_args.sg_b_max, "Largest semigroup generator")
      ->capture_default_str();
  sweep_cmd->add_option("--n-min", sweep_args.n_min, "Smallest semigroup n")->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep_args.n_max, "Largest semigroup n")->capture_default_str();
  sweep_cmd->add_option("--q-min", sweep_args.q_min, "Smallest q")->capture_default_str();
  sweep_cmd->add_option("--q-max", sweep_args.q_max, "Largest q (default: rho of each case)")
      ->each([&sweep_args](const std::string&) { sweep_args.q_max_set = true; });
  sweep_cmd->add_option("--gm-a-invariant", sweep_args.gm_a_invariant,
                        "a-invariant of the tangent cone (predictor-only model)")
      ->each([&sweep_args](const std::string&) { sweep_args.gm_set = true; });
  sweep_cmd->add_option("--file", sweep_args.file, "JSON sweep spec");
  sweep_cmd->add_option("--box-cap", sweep_args.box_cap, "Box point cap override")
      ->each([&sweep_args](const std::string&) { sweep_args.box_cap_set = true; });
  sweep_cmd->add_option("--reduction-n-max", sweep_args.reduction_n_max,
                        "Cap for the reduction-number search")
      ->each([&sweep_args](const std::string&) { sweep_args.reduction_set = true; });
  sweep_cmd->add_option("--time-budget", sweep_args.time_budget_s,
                        "Wall-clock budget in seconds; later cases are skipped")
      ->each([&sweep_args](const std::string&) { sweep_args.budget_set = true; });
  sweep_cmd->add_option("--workers", sweep_args.workers, "Worker threads")->capture_default_str();
  add_output_flags(sweep_cmd, sweep_args.out);

  ClosureArgs closure_args;
  CLI::App* closure_cmd = app.add_subcommand(
      "closure", "Integral-closure membership and generator queries");
  closure_cmd->add_option("--a", closure_args.a, "Diagonal exponents a_1,...,a_d")
      ->delimiter(',');
  closure_cmd->add_option("--gens", closure_args.gens,
                          "Explicit generators, rows separated by ';' (e.g. '2,0;0,3')");
  closure_cmd->add_option("--point", closure_args.points,
                          "Exponent vector to test for closure membership (repeatable)");
  closure_cmd->add_flag("--generators", closure_args.show_generators,
                        "Print the minimal generators of the closure");
  add_output_flags(closure_cmd, closure_args.out);

  SemigroupArgs sg_args;
  CLI::App* sg_cmd = app.add_subcommand(
      "semigroup", "Analyze one numerical-semigroup case k[[t^a, t^b]]");
  sg_cmd->add_option("--a", sg_args.a, "First generator")->required();
  sg_cmd->add_option("--b", sg_args.b, "Second generator")->required();
  sg_cmd->add_option("--n", sg_args.n, "Parameter exponent: Q = (t^{a n})")->capture_default_str();
  sg_cmd->add_option("--q", sg_args.q, "Socle power")->capture_default_str();
  sg_cmd->add_option("--reduction-n-max", sg_args.reduction_n_max,
                     "Cap for the reduction-number search")
      ->each([&sg_args](const std::string&) { sg_args.reduction_set = true; });
  add_output_flags(sg_cmd, sg_args.out);

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the built-in verification suite (nine timed criteria)");
  verify_cmd->add_option("--workers", verify_args.workers,
                         "Worker threads for the sweeps (0 = auto)");
  verify_cmd->add_option("--out", verify_args.out_path, "Write results to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_args);
    if (*sweep_cmd) return run_sweep_cmd(sweep_args);
    if (*closure_cmd) return run_closure(closure_args);
    if (*sg_cmd) return run_semigroup(sg_args);
    if (*verify_cmd) return run_verify(verify_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
