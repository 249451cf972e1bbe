#include "ngopt/diagnostics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "ngopt/errors.hpp"

namespace ngopt {

namespace {

// Orthonormal basis of the hyperplane orthogonal to grad (Householder
// reflector columns; never degenerate regardless of grad's direction).
MatrixXd tangent_basis_of(const VectorXd& grad) {
  const Eigen::Index n = grad.size();
  const VectorXd unit = grad / grad.norm();
  const double sign = unit(n - 1) >= 0.0 ? 1.0 : -1.0;
  VectorXd v = unit;
  v(n - 1) += sign;
  const MatrixXd reflector =
      MatrixXd::Identity(n, n) - (2.0 / v.squaredNorm()) * (v * v.transpose());
  return reflector.leftCols(n - 1);
}

}  // namespace

LinearLocalModel make_linear_local_model(const VectorXd& lambda_diag,
                                         const VectorXd& tangent_slopes,
                                         const MatrixXd& a_matrix,
                                         const VectorXd& b_vector,
                                         double zeta) {
  const Eigen::Index k = lambda_diag.size();
  if (k < 1 || tangent_slopes.size() != k || b_vector.size() != k ||
      a_matrix.rows() != k || a_matrix.cols() != k) {
    throw InputError("inconsistent linear model dimensions");
  }
  if ((a_matrix - a_matrix.transpose()).norm() >
      1e-12 * (1.0 + a_matrix.norm())) {
    throw InputError("coupling matrix must be symmetric");
  }
  if (!(zeta >= 0.0 && zeta < 1.0)) {
    throw InputError("zeta must lie in [0, 1)");
  }

  LinearLocalModel model;
  model.lambda_diag = lambda_diag;
  model.tangent_slopes = tangent_slopes;
  model.a_matrix = a_matrix;
  model.b_vector = b_vector;
  model.lambda_zeta = MatrixXd(lambda_diag.asDiagonal()) - (1.0 - zeta) * a_matrix;
  model.b_zeta =
      lambda_diag.cwiseProduct(tangent_slopes) + (1.0 - zeta) * b_vector;
  return model;
}

CentralityReport centrality(const VectorXd& grad_f, const VectorXd& grad_dir,
                            double zeta, double mu) {
  if (grad_f.size() != grad_dir.size()) {
    throw InputError("gradient sizes differ");
  }
  const double f_norm = grad_f.norm();
  const double d_norm = grad_dir.norm();
  if (f_norm <= 0.0 || d_norm <= 0.0) {
    throw InputError("zero gradient has no direction");
  }
  if (!(zeta >= 0.0 && zeta < 1.0)) {
    throw InputError("zeta must lie in [0, 1)");
  }

  CentralityReport report;
  report.cos_theta = std::clamp(grad_f.dot(grad_dir) / (f_norm * d_norm),
                                -1.0, 1.0);
  report.in_mu_neighborhood = report.cos_theta < -mu;
  report.epsilon = 1.0 - zeta;
  return report;
}

KktReport kkt_report(const Evaluation& evaluation,
                     const BarrierState& barrier) {
  const double f_norm = evaluation.grad_f.norm();
  if (f_norm <= 0.0) {
    throw InputError("objective gradient vanished; no multiplier estimate");
  }

  VectorXd dir;
  if (evaluation.g_values.size() == 1) {
    dir = evaluation.grad_g.row(0).transpose();
  } else {
    if (!barrier.defined) {
      throw InputError(
          "multiplier estimate with several constraints needs a defined "
          "barrier (strictly feasible point)");
    }
    dir = barrier.grad_phi;
  }
  const double d_norm = dir.norm();
  if (d_norm <= 0.0) {
    throw InputError("constraint gradient vanished; no multiplier estimate");
  }

  KktReport report;
  report.lambda_star = f_norm / d_norm;
  report.residual_norm = (evaluation.grad_f + report.lambda_star * dir).norm();
  report.normalized_residual = (evaluation.grad_f / f_norm + dir / d_norm).norm();
  report.g_active_value = evaluation.g_values.size() == 1
                              ? evaluation.g_values(0)
                              : evaluation.strictly_interior_margin;
  return report;
}

RelativeConvexityReport relative_convexity(const VectorXd& grad_f,
                                           const VectorXd& grad_g_or_phi,
                                           const MatrixXd& hess_f,
                                           const MatrixXd& hess_g_or_phi,
                                           double degeneracy_tol) {
  const Eigen::Index n = grad_f.size();
  if (n < 2) {
    throw InputError("projected curvature needs dimension >= 2");
  }
  if (grad_g_or_phi.size() != n || hess_f.rows() != n || hess_f.cols() != n ||
      hess_g_or_phi.rows() != n || hess_g_or_phi.cols() != n) {
    throw InputError("inconsistent curvature dimensions");
  }
  const double f_norm = grad_f.norm();
  const double g_norm = grad_g_or_phi.norm();
  if (f_norm <= 0.0 || g_norm <= 0.0) {
    throw InputError("zero gradient has no direction");
  }
  if (!(degeneracy_tol > 0.0)) {
    throw InputError("degeneracy_tol must be positive");
  }

  RelativeConvexityReport report;
  report.tangent_basis = tangent_basis_of(grad_f);
  const MatrixXd blended = hess_f / f_norm + hess_g_or_phi / g_norm;
  MatrixXd projected = report.tangent_basis.transpose() * blended *
                       report.tangent_basis;
  projected = 0.5 * (projected + projected.transpose()).eval();
  report.c_matrix = projected;

  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(projected);
  report.eigenvalues = solver.eigenvalues(); // ascending
  const double scale = std::max(std::abs(report.eigenvalues(0)),
                                std::abs(report.eigenvalues(n - 2)));
  const double tol = degeneracy_tol * (1.0 + scale);
  if (report.eigenvalues(0) > tol) {
    report.classification = ConvexityClass::RelativeConvex;
  } else if (report.eigenvalues(0) < -tol) {
    report.classification = ConvexityClass::NotRelativeConvex;
  } else {
    report.classification = ConvexityClass::Degenerate;
  }
  return report;
}

VectorXd linear_local_model_solution(const LinearLocalModel& model,
                                     const VectorXd& x0, double zeta,
                                     double t) {
  const Eigen::Index k = model.lambda_diag.size();
  if (x0.size() != k + 1) {
    throw InputError("state size must be model dimension + 1");
  }
  if (!(zeta >= 0.0 && zeta < 1.0)) {
    throw InputError("zeta must lie in [0, 1)");
  }

  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(model.lambda_zeta);
  const VectorXd eig = solver.eigenvalues();
  const MatrixXd q = solver.eigenvectors();
  const double scale = eig.cwiseAbs().maxCoeff();
  if (eig.cwiseAbs().minCoeff() <= 1e-12 * (1.0 + scale)) {
    throw DegeneracyError("system matrix is numerically singular");
  }

  const VectorXd in_eigen_basis = q.transpose() * model.b_zeta;
  const VectorXd inv_b = q * in_eigen_basis.cwiseQuotient(eig);
  const VectorXd inv2_b =
      q * in_eigen_basis.cwiseQuotient(eig.cwiseProduct(eig));
  const double drift_rate = 1.0 - zeta;

  const VectorXd transverse0 = x0.head(k);
  const double drifting0 = x0(k);
  const VectorXd c0 = transverse0 - inv_b * drifting0 - drift_rate * inv2_b;

  const double drifting_t = drifting0 - drift_rate * t;
  const VectorXd decay = (-t * eig).array().exp().matrix();
  const VectorXd transverse_t =
      q * decay.cwiseProduct(q.transpose() * c0) + inv_b * drifting_t +
      drift_rate * inv2_b;

  VectorXd state(k + 1);
  state.head(k) = transverse_t;
  state(k) = drifting_t;
  return state;
}

MatrixXd hessian_fd(const Problem& problem, int which, const VectorXd& x,
                    double h) {
  const int n = problem.n_dims;
  if (x.size() != n) {
    throw InputError("point size does not match problem dimension");
  }
  if (!(h > 0.0)) {
    throw InputError("finite-difference step must be positive");
  }
  if (which < -1 || which >= static_cast<int>(problem.constraints.size())) {
    throw InputError("no such constraint index");
  }
  const ValueGradFn& fn =
      which < 0 ? problem.objective : problem.constraints[which];

  const auto sample = [&](const VectorXd& p) {
    const double value = fn(p).value;
    if (!std::isfinite(value)) {
      throw EvaluationError("non-finite sample in Hessian probe", which);
    }
    return value;
  };

  MatrixXd hess(n, n);
  VectorXd probe = x;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      probe(i) += h;
      probe(j) += h;
      const double pp = sample(probe);
      probe(j) -= 2.0 * h;
      const double pm = sample(probe);
      probe(i) -= 2.0 * h;
      const double mm = sample(probe);
      probe(j) += 2.0 * h;
      const double mp = sample(probe);
      probe(i) = x(i);
      probe(j) = x(j);
      hess(i, j) = hess(j, i) = (pp - pm - mp + mm) / (4.0 * h * h);
    }
  }
  return hess;
}

}  // namespace ngopt
