#include "ngopt/problem.hpp"

#include <cmath>
#include <limits>

#include "ngopt/errors.hpp"

namespace ngopt {

namespace {

bool all_finite(const VectorXd& v) { return v.allFinite(); }

void check_value_grad(const ValueGrad& vg, int n, int index) {
  if (vg.grad.size() != n) {
    throw InputError("gradient size " + std::to_string(vg.grad.size()) +
                     " does not match problem dimension " + std::to_string(n));
  }
  if (!std::isfinite(vg.value) || !all_finite(vg.grad)) {
    const std::string who =
        index < 0 ? "objective" : "constraint " + std::to_string(index);
    throw EvaluationError("non-finite " + who + " evaluation", index);
  }
}

}  // namespace

Evaluation evaluate(const Problem& problem, const VectorXd& x) {
  const int n = problem.n_dims;
  if (n < 1 || !problem.objective || problem.constraints.empty()) {
    throw InputError("problem must have n_dims >= 1, an objective, and at "
                     "least one constraint");
  }
  if (x.size() != n) {
    throw InputError("point size " + std::to_string(x.size()) +
                     " does not match problem dimension " + std::to_string(n));
  }

  Evaluation ev;
  const ValueGrad f = problem.objective(x);
  check_value_grad(f, n, -1);
  ev.f_value = f.value;
  ev.grad_f = f.grad;

  const int m = static_cast<int>(problem.constraints.size());
  ev.g_values.resize(m);
  ev.grad_g.resize(m, n);
  for (int i = 0; i < m; ++i) {
    const ValueGrad g = problem.constraints[i](x);
    check_value_grad(g, n, i);
    ev.g_values(i) = g.value;
    ev.grad_g.row(i) = g.grad.transpose();
  }

  ev.strictly_interior_margin = ev.g_values.maxCoeff();
  ev.feasible = ev.strictly_interior_margin < 0.0;
  return ev;
}

BarrierState barrier(const Evaluation& evaluation) {
  const auto n = evaluation.grad_f.size();
  BarrierState state;
  if (!evaluation.feasible) {
    state.phi = std::numeric_limits<double>::quiet_NaN();
    state.grad_phi = VectorXd::Constant(
        n, std::numeric_limits<double>::quiet_NaN());
    state.defined = false;
    return state;
  }

  state.phi = 0.0;
  state.grad_phi = VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < evaluation.g_values.size(); ++i) {
    const double neg_g = -evaluation.g_values(i);
    state.phi -= std::log(neg_g);
    state.grad_phi += evaluation.grad_g.row(i).transpose() / neg_g;
  }
  state.defined = true;
  return state;
}

VectorXd fd_gradient(const std::function<double(const VectorXd&)>& fn,
                     const VectorXd& x) {
  const double h = 1e-6 * (1.0 + x.norm());
  VectorXd grad(x.size());
  VectorXd probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + h;
    const double up = fn(probe);
    probe(i) = x(i) - h;
    const double down = fn(probe);
    probe(i) = x(i);
    grad(i) = (up - down) / (2.0 * h);
  }
  return grad;
}

}  // namespace ngopt
