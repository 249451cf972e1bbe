#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace ngopt {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Value and gradient of a scalar function at one point.
struct ValueGrad {
  double value = 0.0;
  VectorXd grad;
};

using ValueGradFn = std::function<ValueGrad(const VectorXd&)>;
using HessianFn = std::function<MatrixXd(const VectorXd&)>;

/// Smooth inequality-constrained minimization problem:
///   minimize objective(x) subject to constraints[i](x) <= 0 for all i.
/// Callables must be pure (same x, same bits). Hessians are optional; leave
/// the std::function empty when no closed form is available.
struct Problem {
  int n_dims = 0;
  std::string name;
  ValueGradFn objective;
  std::vector<ValueGradFn> constraints;
  HessianFn objective_hessian;                 // optional
  std::vector<HessianFn> constraint_hessians;  // optional, size 0 or m
};

/// One joint evaluation of objective and all constraints at a point.
struct Evaluation {
  double f_value = 0.0;
  VectorXd grad_f;   // n
  VectorXd g_values; // m
  MatrixXd grad_g;   // m x n, row i = gradient of constraint i
  bool feasible = false;               // max_i g_i < 0
  double strictly_interior_margin = 0; // max_i g_i
};

/// Logarithmic barrier phi(x) = -sum_i log(-g_i(x)) and its gradient.
/// Finite only strictly inside the feasible set; `defined` is false (and the
/// numeric fields are NaN) at or past the boundary.
struct BarrierState {
  double phi = 0.0;
  VectorXd grad_phi;
  bool defined = false;
};

/// Evaluates objective and every constraint at x in one pass. Feasibility is
/// reported, never enforced. Throws InputError on dimension mismatch and
/// EvaluationError if any callable returns a non-finite value or gradient.
Evaluation evaluate(const Problem& problem, const VectorXd& x);

/// Barrier value/gradient from a completed evaluation. Undefined (NaN
/// fields, defined=false) unless the evaluation is strictly feasible.
BarrierState barrier(const Evaluation& evaluation);

/// Central-difference gradient probe with per-coordinate step
/// h = 1e-6 * (1 + |x|). Used to cross-check hand-coded gradients.
VectorXd fd_gradient(const std::function<double(const VectorXd&)>& fn,
                     const VectorXd& x);

}  // namespace ngopt
