// Command-line runner: single trajectory runs, the full benchmark suite, and
// barrier-weight scans, with CSV traces and JSON reports.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ngopt/benchmarks.hpp"
#include "ngopt/diagnostics.hpp"
#include "ngopt/errors.hpp"
#include "ngopt/trace_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUnknownProblem = 2;
constexpr int kExitBadStart = 3;
constexpr int kExitEvaluationFailure = 4;

struct RunSpec {
  std::string problem;
  double zeta = 0.98;
  std::optional<double> step;
  std::optional<long> max_iters;
  std::uint64_t seed = 0;
  std::string x0_text;
  std::string trace_out;
  std::string report_out;
  std::string format = "csv";
};

std::string status_name(ngopt::SolveStatus status) {
  switch (status) {
    case ngopt::SolveStatus::BoundaryHit: return "BoundaryHit";
    case ngopt::SolveStatus::MaxIters: return "MaxIters";
    case ngopt::SolveStatus::CriticalPoint: return "CriticalPoint";
    case ngopt::SolveStatus::EvaluationFailure: return "EvaluationFailure";
  }
  return "Unknown";
}

std::string zigzag_name(ngopt::ZigzagCategory category) {
  switch (category) {
    case ngopt::ZigzagCategory::WithinNeighborhood: return "WithinNeighborhood";
    case ngopt::ZigzagCategory::ZigzagNearSolution: return "ZigzagNearSolution";
    case ngopt::ZigzagCategory::ZigzagThroughout: return "ZigzagThroughout";
  }
  return "Unknown";
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ngopt::VectorXd parse_vector(const std::string& text) {
  std::vector<double> values;
  std::string token;
  std::stringstream stream(text);
  while (std::getline(stream, token, ',')) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
      throw ngopt::InputError("malformed coordinate '" + token + "'");
    }
    values.push_back(value);
  }
  ngopt::VectorXd x(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) x(i) = values[i];
  return x;
}

std::vector<double> to_std(const ngopt::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

json report_json(const RunSpec& spec, double step_used, long max_iters_used,
                 const ngopt::BenchmarkReport& report) {
  const ngopt::SolveResult& solve = report.solve_result;
  json j;
  j["schema_version"] = 1;
  j["problem"] = report.name;
  j["zeta"] = spec.zeta;
  j["step"] = step_used;
  j["max_iters"] = max_iters_used;
  j["seed"] = spec.seed;
  j["status"] = status_name(report.status);
  j["iterations"] = report.iters_to_termination;
  j["f_final"] = report.f_final;
  j["rel_error"] = report.rel_error;
  j["zigzag_category"] = zigzag_name(report.zigzag_category);
  j["x_final"] = to_std(solve.x_final);
  if (solve.boundary_point.has_value()) {
    j["boundary_point"] = to_std(*solve.boundary_point);
  }
  if (solve.cos_theta_at_boundary.has_value()) {
    j["cos_theta_at_boundary"] = *solve.cos_theta_at_boundary;
  }

  // Terminal diagnostics where they are defined.
  try {
    const ngopt::BenchmarkEntry& entry = ngopt::find_entry(report.name);
    const ngopt::Evaluation ev = ngopt::evaluate(entry.problem, solve.x_final);
    j["g_max_final"] = ev.strictly_interior_margin;
    const ngopt::BarrierState bs = ngopt::barrier(ev);
    const ngopt::KktReport kkt = ngopt::kkt_report(ev, bs);
    j["kkt"] = {{"lambda_star", kkt.lambda_star},
                {"residual_norm", kkt.residual_norm},
                {"normalized_residual", kkt.normalized_residual},
                {"g_active_value", kkt.g_active_value}};
    const ngopt::VectorXd dir = ev.g_values.size() == 1
                                    ? ngopt::VectorXd(ev.grad_g.row(0))
                                    : bs.grad_phi;
    const ngopt::CentralityReport cent =
        ngopt::centrality(ev.grad_f, dir, spec.zeta, spec.zeta);
    j["centrality"] = {{"cos_theta", cent.cos_theta},
                       {"in_mu_neighborhood", cent.in_mu_neighborhood},
                       {"epsilon", cent.epsilon}};
  } catch (const std::exception&) {
    // Leave diagnostics out when undefined at the terminal point.
  }
  return j;
}

int cmd_run(const RunSpec& spec) {
  const ngopt::BenchmarkEntry* entry = nullptr;
  try {
    entry = &ngopt::find_entry(spec.problem);
  } catch (const ngopt::InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUnknownProblem;
  }

  std::optional<ngopt::VectorXd> x0;
  ngopt::BenchmarkReport report;
  try {
    if (!spec.x0_text.empty()) x0 = parse_vector(spec.x0_text);
    report = ngopt::run_benchmark(spec.problem, spec.zeta, spec.step,
                                  spec.seed, "", spec.max_iters, x0);
  } catch (const ngopt::InitializationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadStart;
  } catch (const ngopt::InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadStart;
  } catch (const ngopt::EvaluationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitEvaluationFailure;
  }

  if (!spec.trace_out.empty()) {
    if (spec.format == "json") {
      ngopt::write_trace_json(spec.trace_out, report.solve_result.trace);
    } else {
      ngopt::write_trace_csv(spec.trace_out, report.solve_result.trace);
    }
  }
  if (!spec.report_out.empty()) {
    const double step_used =
        spec.step.value_or(entry->reported_step.value_or(entry->default_step));
    const long iters_used = spec.max_iters.value_or(entry->default_max_iters);
    std::ofstream out(spec.report_out);
    if (!out) {
      std::cerr << "error: cannot open '" << spec.report_out << "'\n";
      return kExitRuntime;
    }
    out << report_json(spec, step_used, iters_used, report).dump(2) << "\n";
  }

  std::cout << "problem=" << report.name << " status="
            << status_name(report.status) << " iters="
            << report.iters_to_termination << " f_final="
            << fmt17(report.f_final) << " rel_error="
            << fmt17(report.rel_error) << " zigzag="
            << zigzag_name(report.zigzag_category) << "\n";

  return report.status == ngopt::SolveStatus::EvaluationFailure
             ? kExitEvaluationFailure
             : kExitOk;
}

int cmd_suite(double zeta, const std::string& out_dir, std::uint64_t seed) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create '" << out_dir << "': " << ec.message()
              << "\n";
    return kExitRuntime;
  }

  std::ofstream summary(out_dir + "/summary.csv");
  if (!summary) {
    std::cerr << "error: cannot open summary in '" << out_dir << "'\n";
    return kExitRuntime;
  }
  summary << "name,step,iters,f_star_ref,f_final,rel_error,zigzag,status\n";

  int complete = 0;
  for (const ngopt::BenchmarkEntry& entry : ngopt::registry()) {
    const std::string& name = entry.problem.name;
    const std::string trace_path = out_dir + "/" + name + "_trace.csv";
    const double step = entry.reported_step.value_or(entry.default_step);
    std::string status;
    try {
      const ngopt::BenchmarkReport report = ngopt::run_benchmark(
          name, zeta, std::nullopt, seed, trace_path, std::nullopt,
          std::nullopt);
      status = status_name(report.status);
      const bool ok = report.status != ngopt::SolveStatus::EvaluationFailure;
      if (ok) ++complete;
      summary << name << ',' << fmt17(step) << ','
              << report.iters_to_termination << ','
              << fmt17(entry.reported_f_star) << ',' << fmt17(report.f_final)
              << ',' << fmt17(report.rel_error) << ','
              << zigzag_name(report.zigzag_category) << ',' << status << "\n";
      std::cout << name << ": " << status << " iters="
                << report.iters_to_termination << " f_final="
                << fmt17(report.f_final) << " rel_error="
                << fmt17(report.rel_error) << "\n";
    } catch (const std::exception& err) {
      status = "error";
      summary << name << ',' << fmt17(step) << ",,," << ",," << ','
              << status << "\n";
      std::cout << name << ": error (" << err.what() << ")\n";
    }
  }

  std::cout << complete << "/" << ngopt::registry().size()
            << " runs completed\n";
  return complete >= 9 ? kExitOk : kExitRuntime;
}

int cmd_zeta_scan(const std::string& problem, const std::vector<double>& zetas,
                  const std::string& out, std::optional<double> step,
                  std::optional<long> max_iters, std::uint64_t seed,
                  const std::string& x0_text) {
  if (zetas.empty()) {
    std::cerr << "error: empty zeta list\n";
    return kExitUnknownProblem;
  }
  const ngopt::BenchmarkEntry* entry = nullptr;
  try {
    entry = &ngopt::find_entry(problem);
  } catch (const ngopt::InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUnknownProblem;
  }

  std::vector<ngopt::ZetaScanRow> rows;
  try {
    const ngopt::VectorXd x0 = x0_text.empty()
                                   ? ngopt::draw_feasible_start(*entry, seed)
                                   : parse_vector(x0_text);
    ngopt::TrajectoryConfig config;
    config.step_size =
        step.value_or(entry->reported_step.value_or(entry->default_step));
    config.max_iters = max_iters.value_or(entry->default_max_iters);
    config.trace_stride = 1000000; // scans keep counts, not trajectories
    // Raw field: iteration counts then scale like 1/(1-zeta), which is what
    // the product column reports.
    config.use_normalized_field = false;
    rows = ngopt::scan_zeta(entry->problem, config, x0, zetas);
  } catch (const ngopt::InitializationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadStart;
  } catch (const ngopt::InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadStart;
  } catch (const ngopt::EvaluationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitEvaluationFailure;
  }

  std::ostream* outp = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) {
      std::cerr << "error: cannot open '" << out << "'\n";
      return kExitRuntime;
    }
    outp = &file;
  }
  *outp << "zeta,iters,hit_boundary,product\n";
  for (const ngopt::ZetaScanRow& row : rows) {
    *outp << fmt17(row.zeta) << ',' << row.iterations << ','
          << (row.hit_boundary ? 1 : 0) << ','
          << fmt17(static_cast<double>(row.iterations) * (1.0 - row.zeta))
          << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first-order trajectory solver for inequality-constrained "
               "minimization"};
  app.require_subcommand(1);

  RunSpec spec;
  auto* run = app.add_subcommand("run", "run one trajectory");
  run->add_option("--problem", spec.problem, "benchmark problem name")
      ->required();
  run->add_option("--zeta", spec.zeta, "barrier weight in [0,1)");
  run->add_option("--step", spec.step, "Euler step size");
  run->add_option("--max-iters", spec.max_iters, "iteration budget");
  run->add_option("--seed", spec.seed, "seed for the random start");
  run->add_option("--x0", spec.x0_text, "start point, comma-separated");
  run->add_option("--trace-out", spec.trace_out, "trace output path");
  run->add_option("--report-out", spec.report_out, "JSON report path");
  run->add_option("--format", spec.format, "trace format")
      ->check(CLI::IsMember({"csv", "json"}));

  double suite_zeta = 0.98;
  std::string suite_out_dir;
  std::uint64_t suite_seed = 1;
  auto* suite = app.add_subcommand("suite", "run the full benchmark suite");
  suite->add_option("--zeta", suite_zeta, "barrier weight in [0,1)");
  suite->add_option("--out-dir", suite_out_dir, "output directory")
      ->required();
  suite->add_option("--seed", suite_seed, "seed for the random starts");

  std::string scan_problem;
  std::vector<double> scan_zetas;
  std::string scan_out;
  std::optional<double> scan_step;
  std::optional<long> scan_max_iters;
  std::uint64_t scan_seed = 0;
  std::string scan_x0;
  auto* scan = app.add_subcommand("zeta-scan",
                                  "iterations to boundary vs barrier weight");
  scan->add_option("--problem", scan_problem, "benchmark problem name")
      ->required();
  scan->add_option("--zetas", scan_zetas, "comma-separated weights")
      ->delimiter(',');
  scan->add_option("--out", scan_out, "CSV output path (default stdout)");
  scan->add_option("--step", scan_step, "Euler step size");
  scan->add_option("--max-iters", scan_max_iters, "iteration budget");
  scan->add_option("--seed", scan_seed, "seed for the random start");
  scan->add_option("--x0", scan_x0, "start point, comma-separated");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(run)) return cmd_run(spec);
    if (app.got_subcommand(suite)) {
      return cmd_suite(suite_zeta, suite_out_dir, suite_seed);
    }
    return cmd_zeta_scan(scan_problem, scan_zetas, scan_out, scan_step,
                         scan_max_iters, scan_seed, scan_x0);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitRuntime;
  }
}
