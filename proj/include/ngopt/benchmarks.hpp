#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ngopt/integrator.hpp"
#include "ngopt/problem.hpp"

namespace ngopt {

/// One benchmark problem plus its published reference data and the box that
/// random strictly feasible starts are drawn from.
struct BenchmarkEntry {
  Problem problem;
  double reported_f_star = 0.0;          // published optimum, as printed
  std::optional<double> reported_f_zeta; // published terminal value at zeta = 0.98
  std::optional<double> reported_step;
  std::optional<long> reported_iters;
  bool bounds_as_constraints = true; // variable bounds appear as constraints
  VectorXd seed_lo;                  // feasible seed box, lower corner
  VectorXd seed_hi;                  // feasible seed box, upper corner
  std::string seed_box_note;
  // Extra predicate a seed draw must satisfy (empty = none).
  std::function<bool(const VectorXd&)> seed_filter;
  double default_step = 1e-2;  // used when neither caller nor table gives one
  long default_max_iters = 20000;
};

// Terminal oscillation character of the cos_theta trace: settled inside the
// cone neighborhood, oscillating only near the end, or oscillating all along.
enum class ZigzagCategory {
  WithinNeighborhood,
  ZigzagNearSolution,
  ZigzagThroughout,
};

struct BenchmarkReport {
  std::string name;
  double f_final = 0.0;
  double rel_error = 0.0; // |f_final - reported_f_star| / |reported_f_star|
  long iters_to_termination = 0;
  SolveStatus status = SolveStatus::MaxIters;
  ZigzagCategory zigzag_category = ZigzagCategory::WithinNeighborhood;
  std::string trace_path; // where the trace was written, if requested
  SolveResult solve_result;
};

/// The fixed benchmark collection: ten inequality-constrained test problems
/// G01..G24, two closed-form toy problems, and a random-polytope largest
/// inscribed sphere problem. Exactly 13 entries.
const std::vector<BenchmarkEntry>& registry();

/// Registry lookup by name; throws InputError for unknown names.
const BenchmarkEntry& find_entry(const std::string& name);

/// Uniform rejection sampling over the entry's seed box until strictly
/// feasible (and passing the entry's filter). Deterministic per seed. Throws
/// InitializationError after 1e5 rejected draws.
VectorXd draw_feasible_start(const BenchmarkEntry& entry, std::uint64_t seed);

/// Draws a start, runs the trajectory at the given barrier weight and step
/// (entry's reported/default step when absent), and reports the terminal
/// objective error and oscillation category. x0_override skips the draw;
/// a nonempty trace_out is a CSV path the trace is written to.
BenchmarkReport run_benchmark(const std::string& name, double zeta,
                              std::optional<double> step, std::uint64_t seed,
                              const std::string& trace_out = "",
                              std::optional<long> max_iters = std::nullopt,
                              const std::optional<VectorXd>& x0_override =
                                  std::nullopt);

/// Classifies a trace by counting sign reversals of the cos_theta increments
/// among records below the -zeta line: no more than kZigzagReversalBudget
/// reversals in total is WithinNeighborhood; all but that many inside the
/// last quarter of iterations is ZigzagNearSolution; otherwise
/// ZigzagThroughout.
ZigzagCategory classify_zigzag(const std::vector<TraceRecord>& trace,
                               double zeta);

/// Deviation of a planar trajectory of f = |x|^2/2, g = -x_2 + r from its
/// closed-form invariant: max over the path of
/// |x_2 + |x| - 2 xbar (|x_1|/|x0_1|)^(1-zeta)| / xbar with
/// xbar = (x0_2 + |x0|)/2. Requires 2-d points and x0_1 != 0.
double analytic_trajectory_residual(const std::vector<VectorXd>& x_path,
                                    const VectorXd& x0, double zeta);

}  // namespace ngopt
