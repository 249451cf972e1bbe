#include "ngopt/direction.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ngopt/errors.hpp"

namespace ngopt {

namespace {

void check_params(const DirectionParams& params) {
  if (!(params.zeta >= 0.0 && params.zeta < 1.0)) {
    throw InputError("zeta must lie in [0, 1)");
  }
  if (!(params.grad_zero_tol > 0.0)) {
    throw InputError("grad_zero_tol must be positive");
  }
}

double clamped_cos(const VectorXd& a_hat, const VectorXd& b_hat) {
  return std::clamp(a_hat.dot(b_hat), -1.0, 1.0);
}

VectorXd unit_or_zero(const VectorXd& s, double tol) {
  const double norm = s.norm();
  if (norm > tol) return s / norm;
  return VectorXd::Zero(s.size());
}

}  // namespace

DirectionResult direction_single(const VectorXd& grad_f, const VectorXd& grad_g,
                                 const DirectionParams& params) {
  check_params(params);
  if (grad_f.size() != grad_g.size()) {
    throw InputError("gradient sizes differ");
  }
  const double f_norm = grad_f.norm();
  const double tol = params.grad_zero_tol * (1.0 + f_norm);
  if (f_norm <= tol) {
    throw CriticalPointSignal("objective gradient vanished");
  }
  const double g_norm = grad_g.norm();
  if (g_norm <= tol) {
    throw ConstraintCriticalSignal("constraint gradient vanished");
  }

  const VectorXd f_hat = grad_f / f_norm;
  const VectorXd g_hat = grad_g / g_norm;
  DirectionResult result;
  result.s = -f_hat - params.zeta * g_hat;
  result.s_unit = unit_or_zero(result.s, tol);
  result.branch = DirectionBranch::SingleConstraint;
  result.cos_theta = clamped_cos(f_hat, g_hat);
  return result;
}

DirectionResult direction_multi(const Evaluation& evaluation,
                                const BarrierState& barrier,
                                const DirectionParams& params) {
  check_params(params);
  if (!barrier.defined) {
    throw InputError("barrier undefined: point is not strictly feasible");
  }
  const double f_norm = evaluation.grad_f.norm();
  const double tol = params.grad_zero_tol * (1.0 + f_norm);
  if (f_norm <= tol) {
    throw CriticalPointSignal("objective gradient vanished");
  }
  if (!barrier.grad_phi.allFinite()) {
    throw EvaluationError("non-finite barrier gradient", -1);
  }

  DirectionResult result;
  const VectorXd f_hat = evaluation.grad_f / f_norm;
  const double phi_norm = barrier.grad_phi.norm();
  if (phi_norm > tol) {
    const VectorXd phi_hat = barrier.grad_phi / phi_norm;
    result.s = -f_hat - params.zeta * phi_hat;
    result.s_unit = unit_or_zero(result.s, tol);
    result.branch = DirectionBranch::BarrierBranch;
    result.cos_theta = clamped_cos(f_hat, phi_hat);
  } else {
    // Barrier gradient numerically zero: plain descent escapes the stall.
    result.s = -evaluation.grad_f;
    result.s_unit = result.s / f_norm;
    result.branch = DirectionBranch::SafeguardBranch;
    result.cos_theta = std::nullopt;
  }
  return result;
}

MsdmDecomposition msdm_direction(const VectorXd& grad_f, const VectorXd& grad_g,
                                 double c) {
  if (!(c >= 1.0)) {
    throw InputError("combination weight c must be >= 1");
  }
  if (grad_f.size() != grad_g.size()) {
    throw InputError("gradient sizes differ");
  }
  const double f_norm = grad_f.norm();
  const double g_norm = grad_g.norm();
  if (f_norm <= 0.0 || g_norm <= 0.0) {
    throw InputError("zero gradient has no direction");
  }
  const VectorXd f_hat = grad_f / f_norm;
  const VectorXd g_hat = grad_g / g_norm;
  const double cos = clamped_cos(f_hat, g_hat);
  if (std::abs(cos) >= 1.0 - 1e-12) {
    throw DegenerateGeometry("normalized gradients are parallel");
  }

  MsdmDecomposition d;
  const double diff_norm = std::sqrt(2.0 - 2.0 * cos); // |g_hat - f_hat|
  const double sum_norm = std::sqrt(2.0 + 2.0 * cos);  // |g_hat + f_hat|
  d.v1 = (g_hat - f_hat) / diff_norm;
  d.v2 = (-f_hat - g_hat) / sum_norm;
  d.sigma1 = std::sqrt(1.0 - cos);
  d.sigma2 = std::sqrt(1.0 + cos);
  d.cos_alpha1 = std::sqrt((1.0 - cos) / 2.0);
  d.cos_alpha2 = std::sqrt((1.0 + cos) / 2.0);
  d.s_c = d.cos_alpha1 * d.v1 + c * d.cos_alpha2 * d.v2;

  // Cross-check against an explicit SVD of the stacked normalized gradients.
  MatrixXd stacked(2, grad_f.size());
  stacked.row(0) = f_hat.transpose();
  stacked.row(1) = g_hat.transpose();
  Eigen::JacobiSVD<MatrixXd> svd(stacked, Eigen::ComputeThinV);
  const VectorXd sv = svd.singularValues(); // descending
  const int col_v2 = d.sigma2 >= d.sigma1 ? 0 : 1;
  const int col_v1 = 1 - col_v2;
  if (std::abs(sv(col_v1) - d.sigma1) > 1e-8 ||
      std::abs(sv(col_v2) - d.sigma2) > 1e-8) {
    throw std::logic_error("direction decomposition disagrees with SVD");
  }
  if (std::abs(cos) >= 1e-8) { // distinct singular values: vectors determined
    for (const auto& [col, v] : {std::pair<int, const VectorXd*>{col_v1, &d.v1},
                                 {col_v2, &d.v2}}) {
      VectorXd u = svd.matrixV().col(col);
      if (u.dot(-f_hat) < 0.0) u = -u;
      if ((u - *v).norm() > 1e-8) {
        throw std::logic_error("direction decomposition disagrees with SVD");
      }
    }
  }
  return d;
}

double zeta_from_c(double c) {
  if (!(c >= 1.0)) {
    throw InputError("combination weight c must be >= 1");
  }
  return (c - 1.0) / (c + 1.0);
}

}  // namespace ngopt
