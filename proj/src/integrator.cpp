#include "ngopt/integrator.hpp"

#include <cmath>
#include <limits>

#include "ngopt/errors.hpp"

namespace ngopt {

namespace {

void check_config(const TrajectoryConfig& config) {
  if (!(config.zeta >= 0.0 && config.zeta < 1.0)) {
    throw InputError("zeta must lie in [0, 1)");
  }
  if (!(config.step_size > 0.0)) {
    throw InputError("step_size must be positive");
  }
  if (config.max_iters < 1) {
    throw InputError("max_iters must be >= 1");
  }
  if (config.trace_stride < 1) {
    throw InputError("trace_stride must be >= 1");
  }
  if (!(config.grad_zero_tol > 0.0)) {
    throw InputError("grad_zero_tol must be positive");
  }
}

TraceRecord make_record(long iter, double h, const VectorXd& x,
                        const Evaluation& ev, std::optional<double> cos_theta,
                        double s_norm) {
  TraceRecord record;
  record.iter = iter;
  record.t = static_cast<double>(iter) * h;
  record.x = x;
  record.f = ev.f_value;
  record.g_max = ev.strictly_interior_margin;
  record.cos_theta = cos_theta;
  record.s_norm = s_norm;
  return record;
}

}  // namespace

SolveResult solve(const Problem& problem, const TrajectoryConfig& config,
                  const VectorXd& x0) {
  check_config(config);
  const double h = config.step_size;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const DirectionParams dir_params{config.zeta, config.grad_zero_tol};

  // Failures at the start are the caller's problem and propagate.
  Evaluation ev = evaluate(problem, x0);
  if (!ev.feasible) {
    throw InputError("x0 is not strictly feasible");
  }

  SolveResult result;
  VectorXd x = x0;
  VectorXd prev_x = x0;
  double prev_f = ev.f_value;
  std::optional<double> last_cos;

  for (long iter = 0;; ++iter) {
    if (iter > 0) {
      try {
        ev = evaluate(problem, x);
      } catch (const EvaluationError&) {
        result.status = SolveStatus::EvaluationFailure;
        result.x_final = prev_x;
        result.f_final = prev_f;
        result.iterations = iter;
        return result;
      }
    }

    if (!ev.feasible) { // first iterate at or past the boundary
      result.trace.push_back(make_record(iter, h, x, ev, std::nullopt, nan));
      result.status = SolveStatus::BoundaryHit;
      if (config.boundary_policy == BoundaryPolicy::StopAtFirstViolation) {
        result.boundary_point = x;
        result.x_final = x;
        result.f_final = ev.f_value;
      } else {
        result.boundary_point = prev_x;
        result.x_final = prev_x;
        result.f_final = prev_f;
      }
      result.cos_theta_at_boundary = last_cos;
      result.iterations = iter;
      return result;
    }

    const BarrierState barrier_state = barrier(ev);
    DirectionResult dir;
    try {
      dir = direction_multi(ev, barrier_state, dir_params);
    } catch (const CriticalPointSignal&) {
      result.trace.push_back(make_record(iter, h, x, ev, std::nullopt, nan));
      result.status = SolveStatus::CriticalPoint;
      result.x_final = x;
      result.f_final = ev.f_value;
      result.iterations = iter;
      return result;
    } catch (const EvaluationError&) { // barrier gradient overflowed
      result.status = SolveStatus::EvaluationFailure;
      result.x_final = x;
      result.f_final = ev.f_value;
      result.iterations = iter;
      return result;
    }

    const double s_norm = dir.s.norm();
    const bool recorded = iter % config.trace_stride == 0;
    if (recorded) {
      result.trace.push_back(make_record(iter, h, x, ev, dir.cos_theta, s_norm));
    }
    last_cos = dir.cos_theta;

    if (iter >= config.max_iters) {
      if (!recorded) { // terminal iterate is always recorded
        result.trace.push_back(
            make_record(iter, h, x, ev, dir.cos_theta, s_norm));
      }
      result.status = SolveStatus::MaxIters;
      result.x_final = x;
      result.f_final = ev.f_value;
      result.iterations = iter;
      return result;
    }

    prev_x = x;
    prev_f = ev.f_value;
    if (config.use_normalized_field) {
      x = x + h * dir.s_unit;
    } else {
      x = x + h * dir.s;
    }
  }
}

std::pair<VectorXd, TraceRecord> step(const Problem& problem,
                                      const TrajectoryConfig& config,
                                      const VectorXd& x_k) {
  check_config(config);
  const Evaluation ev = evaluate(problem, x_k);
  if (!ev.feasible) {
    throw InputError("x_k is not strictly feasible");
  }
  const BarrierState barrier_state = barrier(ev);
  const DirectionResult dir = direction_multi(
      ev, barrier_state, DirectionParams{config.zeta, config.grad_zero_tol});
  const TraceRecord record =
      make_record(0, config.step_size, x_k, ev, dir.cos_theta, dir.s.norm());
  VectorXd next;
  if (config.use_normalized_field) {
    next = x_k + config.step_size * dir.s_unit;
  } else {
    next = x_k + config.step_size * dir.s;
  }
  return {next, record};
}

std::vector<ZetaScanRow> scan_zeta(const Problem& problem,
                                   const TrajectoryConfig& base_config,
                                   const VectorXd& x0,
                                   const std::vector<double>& zetas) {
  std::vector<ZetaScanRow> rows;
  rows.reserve(zetas.size());
  for (const double zeta : zetas) {
    TrajectoryConfig config = base_config;
    config.zeta = zeta;
    const SolveResult result = solve(problem, config, x0);
    rows.push_back(
        {zeta, result.iterations, result.status == SolveStatus::BoundaryHit});
  }
  return rows;
}

}  // namespace ngopt
