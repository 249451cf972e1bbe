#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ngopt/direction.hpp"
#include "ngopt/problem.hpp"

namespace ngopt {

enum class BoundaryPolicy {
  StopAtFirstViolation, // report the first iterate with max_i g_i >= 0
  ClampToLastFeasible,  // report the last strictly feasible iterate
};

enum class SolveStatus {
  BoundaryHit,
  MaxIters,
  CriticalPoint,
  EvaluationFailure,
};

struct TrajectoryConfig {
  double zeta = 0.98;
  double step_size = 1e-2;
  long max_iters = 100000;
  // true: fixed-step Euler on the unit field x += h * s/|s|, so t = iter * h
  // is accumulated arc length. false: x += h * s.
  bool use_normalized_field = true;
  double grad_zero_tol = 1e-12;
  BoundaryPolicy boundary_policy = BoundaryPolicy::ClampToLastFeasible;
  // Record every stride-th iterate (plus the terminal one). 1 = everything.
  long trace_stride = 1;
};

struct TraceRecord {
  long iter = 0;
  double t = 0.0; // iter * step_size
  VectorXd x;
  double f = 0.0;
  double g_max = 0.0;                  // max_i g_i
  std::optional<double> cos_theta;     // empty past the boundary or on safeguard
  double s_norm = 0.0;                 // |s| before normalization; NaN if undefined
};

struct SolveResult {
  SolveStatus status = SolveStatus::MaxIters;
  VectorXd x_final;
  double f_final = 0.0;
  std::optional<VectorXd> boundary_point;      // set when status = BoundaryHit
  std::optional<double> cos_theta_at_boundary; // cos_theta at the last feasible iterate
  std::vector<TraceRecord> trace;
  long iterations = 0; // steps taken before termination
};

/// Follows the blended direction field from a strictly feasible x0 with
/// fixed-step Euler until the trajectory crosses the feasible boundary, the
/// objective gradient vanishes, the iteration budget runs out, or an
/// evaluation turns non-finite. Throws InputError for infeasible x0 or
/// malformed config; mid-run evaluation failures become
/// SolveStatus::EvaluationFailure with the trace collected so far.
SolveResult solve(const Problem& problem, const TrajectoryConfig& config,
                  const VectorXd& x0);

/// One Euler update from a strictly feasible x_k, returning the next point
/// and the trace record of x_k. Exposed for testing.
std::pair<VectorXd, TraceRecord> step(const Problem& problem,
                                      const TrajectoryConfig& config,
                                      const VectorXd& x_k);

struct ZetaScanRow {
  double zeta = 0.0;
  long iterations = 0;  // iterations to termination
  bool hit_boundary = false;
};

/// Runs solve once per zeta value (base_config otherwise unchanged) and
/// reports iterations to termination. Empty input gives empty output.
std::vector<ZetaScanRow> scan_zeta(const Problem& problem,
                                   const TrajectoryConfig& base_config,
                                   const VectorXd& x0,
                                   const std::vector<double>& zetas);

}  // namespace ngopt
