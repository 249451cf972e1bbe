// Acceptance suite: end-to-end checks of the solver against its published
// reference behaviors. Prints one PASS/FAIL line per criterion and exits
// with the number of failures. Tolerances sit next to the checks they gate.

#include <Eigen/Core>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ngopt/benchmarks.hpp"
#include "ngopt/diagnostics.hpp"
#include "ngopt/direction.hpp"
#include "ngopt/errors.hpp"
#include "ngopt/integrator.hpp"
#include "ngopt/problem.hpp"
#include "ngopt/trace_io.hpp"

namespace {

using Eigen::Index;
using ngopt::MatrixXd;
using ngopt::VectorXd;

int failures = 0;

void report(int id, const std::string& label, bool pass,
            const std::string& detail) {
  std::printf("%s criterion %2d: %s [%s]\n", pass ? "PASS" : "FAIL", id,
              label.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void guard(int id, const std::string& label,
           const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [pass, detail] = body();
    report(id, label, pass, detail);
  } catch (const std::exception& err) {
    report(id, label, false, std::string("exception: ") + err.what());
  }
}

double median5(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return values[values.size() / 2];
}

std::string num(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

// Terminal points accumulated by the benchmark and toy criteria; the
// residual-identity criterion replays diagnostics at each of them.
struct TerminalPoint {
  std::string problem;
  VectorXd x;
};
std::vector<TerminalPoint> terminal_points;

VectorXd reference_x_star(const std::string& name) {
  std::ifstream in(std::string(NGOPT_DATA_DIR) + "/reference_values.txt");
  if (!in) throw ngopt::InputError("cannot open reference_values.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string row_name, kind;
    row >> row_name >> kind;
    if (row_name != name || kind != "x_star") continue;
    std::vector<double> coords;
    double v;
    while (row >> v) coords.push_back(v);
    return Eigen::Map<const VectorXd>(coords.data(),
                                      static_cast<Index>(coords.size()));
  }
  throw ngopt::InputError("no stored optimum for " + name);
}

// --- criterion 1: benchmark reproduction at the reported settings ----------

std::pair<bool, std::string> criterion1() {
  const double zeta = 0.98;
  const std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  // Value-matched problems allow 5x the reported error; G10's narrow feasible
  // corridor gets 10x; G19's reported value is itself off by 7.3x from the
  // optimum, so it is held to termination geometry instead.
  const std::vector<std::pair<std::string, double>> matched = {
      {"G01", 5.0}, {"G04", 5.0}, {"G06", 5.0}, {"G07", 5.0}, {"G08", 5.0},
      {"G09", 5.0}, {"G10", 10.0}, {"G18", 5.0}, {"G24", 5.0}};

  const auto start = std::chrono::steady_clock::now();
  std::ostringstream why;
  bool pass = true;

  for (const auto& [name, multiplier] : matched) {
    const ngopt::BenchmarkEntry& entry = ngopt::find_entry(name);
    const double table_error =
        std::abs(entry.reported_f_zeta.value() - entry.reported_f_star) /
        std::abs(entry.reported_f_star);
    const double reported_iters =
        static_cast<double>(entry.reported_iters.value());

    std::vector<double> rels, iters;
    for (const std::uint64_t seed : seeds) {
      const ngopt::BenchmarkReport run =
          ngopt::run_benchmark(name, zeta, std::nullopt, seed);
      if (run.status != ngopt::SolveStatus::BoundaryHit &&
          run.status != ngopt::SolveStatus::MaxIters) {
        pass = false;
        why << name << " seed " << seed << " did not terminate cleanly; ";
      }
      rels.push_back(run.rel_error);
      iters.push_back(static_cast<double>(run.iters_to_termination));
      terminal_points.push_back({name, run.solve_result.x_final});
    }
    const double med_rel = median5(rels);
    const double med_iters = median5(iters);
    if (!(med_rel <= multiplier * table_error)) {
      pass = false;
      why << name << " median error " << num(med_rel) << " > "
          << num(multiplier * table_error) << "; ";
    }
    if (!(med_iters >= 0.3 * reported_iters &&
          med_iters <= 3.0 * reported_iters)) {
      pass = false;
      why << name << " median iterations " << num(med_iters)
          << " outside [" << num(0.3 * reported_iters) << ", "
          << num(3.0 * reported_iters) << "]; ";
    }
  }

  // G19: every seeded run must stop on the boundary nearly anti-parallel.
  std::vector<double> g19_cos;
  for (const std::uint64_t seed : seeds) {
    const ngopt::BenchmarkReport run =
        ngopt::run_benchmark("G19", zeta, std::nullopt, seed);
    if (run.status != ngopt::SolveStatus::BoundaryHit) {
      pass = false;
      why << "G19 seed " << seed << " missed the boundary; ";
      g19_cos.push_back(0.0);
    } else {
      g19_cos.push_back(run.solve_result.cos_theta_at_boundary.value());
    }
    terminal_points.push_back({"G19", run.solve_result.x_final});
  }
  const double g19_med = median5(g19_cos);
  if (!(g19_med <= -zeta + 0.05)) {
    pass = false;
    why << "G19 median boundary angle " << num(g19_med) << " > "
        << num(-zeta + 0.05) << "; ";
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!(elapsed < 300.0)) {
    pass = false;
    why << "took " << num(elapsed) << " s >= 300 s; ";
  }
  if (pass) {
    why << "10 problems x 5 seeds in " << num(elapsed)
        << " s, G19 median boundary angle " << num(g19_med);
  }
  return {pass, why.str()};
}

// --- criterion 2: closed-form turning point of the planar toy --------------

std::pair<bool, std::string> criterion2() {
  VectorXd x0(2);
  x0 << 10.0, 20.0;
  const double zeta = 0.9;
  ngopt::TrajectoryConfig config;
  config.zeta = zeta;
  config.step_size = 1e-3;
  config.use_normalized_field = false;
  config.max_iters = 1000000;
  const ngopt::SolveResult run =
      ngopt::solve(ngopt::find_entry("toy2d_linear").problem, config, x0);

  std::size_t peak = 0;
  for (std::size_t i = 1; i < run.trace.size(); ++i) {
    if (run.trace[i].x(1) > run.trace[peak].x(1)) peak = i;
  }
  const double x1_peak = std::abs(run.trace[peak].x(0));
  const double x2_peak = run.trace[peak].x(1);

  const double x2bar = 0.5 * (x0(1) + x0.norm());
  const double width = std::sqrt(1.0 - zeta * zeta);
  const double x2_turn =
      std::pow(2.0 * zeta / (1.0 + zeta) * x2bar *
                   std::pow(width / (zeta * std::abs(x0(0))), 1.0 - zeta),
               1.0 / zeta);
  const double x1_turn = x2_turn / zeta * width;

  const bool ok_x2 = std::abs(x2_peak - x2_turn) <= 0.005 * x2_turn;
  const bool ok_x1 = std::abs(x1_peak - x1_turn) <= 0.05 * x1_turn;
  std::ostringstream why;
  why << "peak (" << num(x1_peak) << ", " << num(x2_peak)
      << ") vs closed form (" << num(x1_turn) << ", " << num(x2_turn) << ")";
  return {ok_x2 && ok_x1, why.str()};
}

// --- criterion 3: toy problems stop on the boundary nearly anti-parallel ---

std::pair<bool, std::string> criterion3() {
  const std::vector<std::pair<std::string, VectorXd>> starts = {
      {"toy2d_linear", (VectorXd(2) << 10.0, 20.0).finished()},
      {"toy2d_nonconvex", (VectorXd(2) << 5.0, 8.0).finished()}};
  bool pass = true;
  std::ostringstream why;
  double worst_margin = 1.0;
  for (const auto& [name, x0] : starts) {
    for (const double zeta : {0.9, 0.99}) {
      const ngopt::BenchmarkReport run = ngopt::run_benchmark(
          name, zeta, 1e-3, 0, "", 1000000, x0);
      terminal_points.push_back({name, run.solve_result.x_final});
      if (run.status != ngopt::SolveStatus::BoundaryHit) {
        pass = false;
        why << name << " at weight " << num(zeta) << " ended "
            << static_cast<int>(run.status) << " not on the boundary; ";
        continue;
      }
      const double cos_b = run.solve_result.cos_theta_at_boundary.value();
      worst_margin = std::min(worst_margin, (-zeta + 0.05) - cos_b);
      if (!(cos_b <= -zeta + 0.05)) {
        pass = false;
        why << name << " boundary angle " << num(cos_b) << " > "
            << num(-zeta + 0.05) << " at weight " << num(zeta) << "; ";
      }
    }
  }
  if (pass) why << "4 runs hit the boundary, slack " << num(worst_margin);
  return {pass, why.str()};
}

// --- criterion 4: iterations to the boundary scale like 1/(1 - zeta) -------

std::pair<bool, std::string> criterion4() {
  VectorXd x0(2);
  x0 << 10.0, 20.0;
  ngopt::TrajectoryConfig config;
  config.step_size = 0.01;
  config.use_normalized_field = false;
  config.max_iters = 1000000;
  config.trace_stride = 1000000;
  const std::vector<double> zetas = {0.5, 0.9, 0.99};
  const std::vector<ngopt::ZetaScanRow> rows = ngopt::scan_zeta(
      ngopt::find_entry("toy2d_linear").problem, config, x0, zetas);

  bool pass = rows.size() == zetas.size();
  std::ostringstream why;
  double min_product = 1e300, max_product = 0.0;
  long prev = 0;
  for (const ngopt::ZetaScanRow& row : rows) {
    if (!row.hit_boundary) {
      pass = false;
      why << "no boundary at weight " << num(row.zeta) << "; ";
    }
    if (row.iterations < prev) {
      pass = false;
      why << "iteration count dropped at weight " << num(row.zeta) << "; ";
    }
    prev = row.iterations;
    const double product =
        static_cast<double>(row.iterations) * (1.0 - row.zeta);
    min_product = std::min(min_product, product);
    max_product = std::max(max_product, product);
  }
  if (!(max_product <= 10.0 * min_product)) {
    pass = false;
    why << "products spread " << num(max_product / min_product) << "x > 10x; ";
  }
  if (pass) {
    why << "counts";
    for (const auto& row : rows) why << " " << row.iterations;
    why << ", product spread " << num(max_product / min_product) << "x";
  }
  return {pass, why.str()};
}

// --- criterion 5: two-gradient decomposition matches the blended field -----

std::pair<bool, std::string> criterion5() {
  std::mt19937_64 rng(424242);
  const auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  const int dims[] = {2, 3, 10, 50};
  double worst = 1.0;
  int degenerate_redraws = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = dims[trial % 4];
    VectorXd grad_f(n), grad_g(n);
    for (Index i = 0; i < n; ++i) grad_f(i) = 2.0 * uniform() - 1.0;
    for (Index i = 0; i < n; ++i) grad_g(i) = 2.0 * uniform() - 1.0;
    const double c = 1.0 + 99.0 * uniform();
    ngopt::DirectionParams params;
    params.zeta = ngopt::zeta_from_c(c);
    try {
      const ngopt::MsdmDecomposition decomp =
          ngopt::msdm_direction(grad_f, grad_g, c);
      const ngopt::DirectionResult blend =
          ngopt::direction_single(grad_f, grad_g, params);
      const double cosine = decomp.s_c.dot(blend.s) /
                            (decomp.s_c.norm() * blend.s.norm());
      worst = std::min(worst, cosine);
    } catch (const ngopt::DegenerateGeometry&) {
      ++degenerate_redraws;
      --trial;
      if (degenerate_redraws > 100) throw;
    }
  }
  std::ostringstream why;
  why << "1000 gradient pairs, worst alignment 1 - " << num(1.0 - worst);
  return {worst >= 1.0 - 1e-10, why.str()};
}

// --- criterion 6: zero weight reduces bitwise to plain normalized descent --

std::pair<bool, std::string> criterion6() {
  const std::vector<std::tuple<std::string, VectorXd, long>> cases = {
      {"toy2d_linear", (VectorXd(2) << 10.0, 40.0).finished(), 2000},
      {"toy2d_nonconvex", (VectorXd(2) << 5.0, 8.0).finished(), 300}};
  bool pass = true;
  std::ostringstream why;
  long compared = 0;
  for (const auto& [name, x0, budget] : cases) {
    const ngopt::Problem& problem = ngopt::find_entry(name).problem;
    ngopt::TrajectoryConfig config;
    config.zeta = 0.0;
    config.step_size = 0.01;
    config.max_iters = budget;
    const ngopt::SolveResult run = ngopt::solve(problem, config, x0);
    if (run.status != ngopt::SolveStatus::MaxIters ||
        static_cast<long>(run.trace.size()) != budget + 1) {
      pass = false;
      why << name << " did not run the full budget; ";
      continue;
    }
    VectorXd x = x0;
    const double h = 0.01;
    for (long i = 0; i <= budget; ++i) {
      const VectorXd& recorded = run.trace[static_cast<std::size_t>(i)].x;
      if (recorded(0) != x(0) || recorded(1) != x(1)) {
        pass = false;
        why << name << " diverged from the reference loop at step " << i
            << "; ";
        break;
      }
      ++compared;
      if (i == budget) break;
      VectorXd g = ngopt::evaluate(problem, x).grad_f;
      VectorXd d = -(g / g.norm());
      VectorXd u = d / d.norm();
      x = x + h * u;
    }
  }
  if (pass) why << compared << " iterates identical down to the last bit";
  return {pass, why.str()};
}

// --- criterion 7: curvature sign flips across the nonconvex toy's path -----

std::pair<bool, std::string> criterion7() {
  const ngopt::Problem& problem = ngopt::find_entry("toy2d_nonconvex").problem;
  // Points where the two normalized gradients are anti-parallel satisfy
  // x2 = 2 + 5 (x1 - 2)/(x1 - 3).
  const auto locus = [](double x1) {
    return 2.0 + 5.0 * (x1 - 2.0) / (x1 - 3.0);
  };
  const auto curvature_at = [&](double x1) {
    VectorXd x(2);
    x << x1, locus(x1);
    const ngopt::Evaluation ev = ngopt::evaluate(problem, x);
    const MatrixXd hess_f = ngopt::hessian_fd(problem, -1, x, 1e-4);
    const MatrixXd hess_g = ngopt::hessian_fd(problem, 0, x, 1e-4);
    return ngopt::relative_convexity(ev.grad_f, VectorXd(ev.grad_g.row(0)),
                                     hess_f, hess_g);
  };

  bool pass = true;
  std::ostringstream why;
  for (const double x1 : {0.5, 1.0, 1.5}) {
    if (curvature_at(x1).classification != ngopt::ConvexityClass::RelativeConvex) {
      pass = false;
      why << "expected favorable curvature at x1 = " << num(x1) << "; ";
    }
  }
  for (const double x1 : {3.5, 4.5, 5.5}) {
    if (curvature_at(x1).classification !=
        ngopt::ConvexityClass::NotRelativeConvex) {
      pass = false;
      why << "expected unfavorable curvature at x1 = " << num(x1) << "; ";
    }
  }

  double lo = 5.5, hi = 6.5;
  if (!(curvature_at(lo).eigenvalues(0) < 0.0 &&
        curvature_at(hi).eigenvalues(0) > 0.0)) {
    pass = false;
    why << "no sign change in (5.5, 6.5); ";
  } else {
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      (curvature_at(mid).eigenvalues(0) < 0.0 ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    const double expected = 3.0 + std::cbrt(25.0);
    if (std::abs(root - expected) > 1e-6) {
      pass = false;
      why << "flip at " << num(root) << " not " << num(expected) << "; ";
    } else {
      why << "sign flip at x1 = " << num(root) << " matching "
          << num(expected);
    }
  }
  return {pass, why.str()};
}

// --- criterion 8: linearized path model: solution, limit, and divergence ---

std::pair<bool, std::string> criterion8() {
  VectorXd lambda(2), slopes(2), b(2);
  lambda << 1.0, 0.5;
  slopes << 0.3, -0.2;
  b << 0.05, -0.1;
  MatrixXd a(2, 2);
  a << 0.2, 0.1, 0.1, 0.4;
  VectorXd x0(3);
  x0 << 1.3, -0.7, 2.0;

  bool pass = true;
  std::ostringstream why;

  // The closed form satisfies the model equations (finite-difference probe).
  const double zeta = 0.5;
  const ngopt::LinearLocalModel model =
      ngopt::make_linear_local_model(lambda, slopes, a, b, zeta);
  double worst_rel = 0.0;
  for (const double t : {0.3, 1.7}) {
    const double delta = 1e-5;
    const VectorXd at = ngopt::linear_local_model_solution(model, x0, zeta, t);
    const VectorXd fwd =
        ngopt::linear_local_model_solution(model, x0, zeta, t + delta);
    const VectorXd bwd =
        ngopt::linear_local_model_solution(model, x0, zeta, t - delta);
    const VectorXd probe = (fwd - bwd) / (2.0 * delta);
    VectorXd expected(3);
    expected.head(2) = -model.lambda_zeta * at.head(2) + at(2) * model.b_zeta;
    expected(2) = -(1.0 - zeta);
    worst_rel = std::max(
        worst_rel, (probe - expected).norm() / (1.0 + expected.norm()));
  }
  if (!(worst_rel <= 1e-6)) {
    pass = false;
    why << "derivative probe off by " << num(worst_rel) << "; ";
  }

  // As the weight approaches 1 the transverse coordinates ride the tangent.
  const double near = 1.0 - 1e-8;
  const ngopt::LinearLocalModel tight =
      ngopt::make_linear_local_model(lambda, slopes, a, b, near);
  const double t_far = 1e6;
  const VectorXd limit =
      ngopt::linear_local_model_solution(tight, x0, near, t_far);
  const double x_n = x0(2) - (1.0 - near) * t_far;
  const double drift = (limit.head(2) - x_n * slopes).norm();
  if (!(drift <= 1e-6 * (1.0 + std::abs(x_n)))) {
    pass = false;
    why << "tangent limit off by " << num(drift) << "; ";
  }

  // A negative objective slope repels nearby trajectories.
  VectorXd lambda_bad(2);
  lambda_bad << -0.5, 1.0;
  const ngopt::LinearLocalModel repelling =
      ngopt::make_linear_local_model(lambda_bad, slopes, a, b, zeta);
  VectorXd x0_nudged = x0;
  x0_nudged(0) += 0.01;
  const auto gap_at = [&](double t) {
    return (ngopt::linear_local_model_solution(repelling, x0, zeta, t) -
            ngopt::linear_local_model_solution(repelling, x0_nudged, zeta, t))
        .norm();
  };
  const double growth = gap_at(40.0) / gap_at(10.0);
  if (!(growth >= 1e3)) {
    pass = false;
    why << "perturbation grew only " << num(growth) << "x; ";
  }

  if (pass) {
    why << "probe " << num(worst_rel) << ", tangent drift " << num(drift)
        << ", growth " << num(growth) << "x";
  }
  return {pass, why.str()};
}

// --- criterion 9: residual identity at every collected terminal point ------

std::pair<bool, std::string> criterion9() {
  double worst = 0.0;
  int checked = 0;
  for (const TerminalPoint& point : terminal_points) {
    const ngopt::BenchmarkEntry& entry = ngopt::find_entry(point.problem);
    const ngopt::Evaluation ev = ngopt::evaluate(entry.problem, point.x);
    const ngopt::BarrierState bs = ngopt::barrier(ev);
    const ngopt::KktReport kkt = ngopt::kkt_report(ev, bs);
    const VectorXd dir = ev.g_values.size() == 1
                             ? VectorXd(ev.grad_g.row(0))
                             : bs.grad_phi;
    const double cos_theta =
        ngopt::centrality(ev.grad_f, dir, 0.98, 0.98).cos_theta;
    const double gap = std::abs(kkt.normalized_residual *
                                    kkt.normalized_residual -
                                (2.0 + 2.0 * cos_theta));
    worst = std::max(worst, gap);
    ++checked;
  }
  std::ostringstream why;
  why << checked << " terminal points, worst identity gap " << num(worst);
  return {checked >= 54 && worst <= 1e-10, why.str()};
}

// --- criterion 10: polytope center runs land on the reference vertex -------

std::pair<bool, std::string> criterion10() {
  const VectorXd x_star = reference_x_star("chebyshev");
  bool pass = true;
  std::ostringstream why;
  double worst_rel = 0.0, worst_cos = -1.0;
  for (const std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const ngopt::BenchmarkReport run =
        ngopt::run_benchmark("chebyshev", 0.95, std::nullopt, seed);
    if (run.status != ngopt::SolveStatus::BoundaryHit) {
      pass = false;
      why << "seed " << seed << " missed the boundary; ";
      continue;
    }
    const double rel =
        (run.solve_result.x_final - x_star).norm() / x_star.norm();
    double min_cos = 1.0;
    for (const ngopt::TraceRecord& record : run.solve_result.trace) {
      if (record.cos_theta.has_value()) {
        min_cos = std::min(min_cos, *record.cos_theta);
      }
    }
    worst_rel = std::max(worst_rel, rel);
    worst_cos = std::max(worst_cos, min_cos);
    if (!(rel <= 1e-2)) {
      pass = false;
      why << "seed " << seed << " ended " << num(rel)
          << " away from the vertex; ";
    }
    if (!(min_cos <= -0.95)) {
      pass = false;
      why << "seed " << seed << " never reached angle -0.95 (best "
          << num(min_cos) << "); ";
    }
  }
  if (pass) {
    why << "3 seeds, worst distance " << num(worst_rel)
        << ", worst best-angle " << num(worst_cos);
  }
  return {pass, why.str()};
}

}  // namespace

int main() {
  std::printf("acceptance: trajectory solver against reference behaviors\n");
  guard(1, "benchmark medians reproduce the reported table", criterion1);
  guard(2, "planar toy peak matches the closed-form turning point",
        criterion2);
  guard(3, "toy runs stop on the boundary nearly anti-parallel", criterion3);
  guard(4, "boundary-hit counts scale like 1/(1 - zeta)", criterion4);
  guard(5, "two-gradient decomposition matches the blended field",
        criterion5);
  guard(6, "zero weight is bitwise plain normalized descent", criterion6);
  guard(7, "relative curvature flips sign across the nonconvex path",
        criterion7);
  guard(8, "linearized model: probe, tangent limit, divergence", criterion8);
  guard(9, "residual identity holds at all terminal points", criterion9);
  guard(10, "polytope-center runs land on the reference vertex", criterion10);
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
