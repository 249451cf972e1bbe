#pragma once

#include "ngopt/problem.hpp"

namespace ngopt {

/// How centered the current point is between objective descent and the
/// constraint boundary, measured by the angle of the two normalized
/// gradients.
struct CentralityReport {
  double cos_theta = 0.0;
  bool in_mu_neighborhood = false; // cos_theta < -mu
  double epsilon = 0.0;            // 1 - zeta
};

struct KktReport {
  double lambda_star = 0.0;        // |grad_f| / |grad_g or grad_phi|
  double residual_norm = 0.0;      // |grad_f + lambda_star * (grad_g or grad_phi)|
  double normalized_residual = 0.0; // |grad_f/|grad_f| + (grad_g or grad_phi) normalized|
  double g_active_value = 0.0;     // g_1 for m = 1, max_i g_i otherwise
};

enum class ConvexityClass {
  RelativeConvex,
  Degenerate,
  NotRelativeConvex,
};

/// Curvature of the objective-vs-constraint geometry restricted to the
/// hyperplane orthogonal to grad_f.
struct RelativeConvexityReport {
  MatrixXd c_matrix;     // (n-1) x (n-1), projected curvature
  VectorXd eigenvalues;  // ascending
  ConvexityClass classification = ConvexityClass::Degenerate;
  MatrixXd tangent_basis; // n x (n-1), orthonormal columns orthogonal to grad_f
};

/// Separable linearized model of the trajectory near the central path:
/// objective slopes lambda_i along the first n-1 coordinates, central-path
/// tangent slopes l_i, and constraint-coupling coefficients a_ij, b_i. The
/// assembled system dx~/dt = -lambda_zeta * x~ + x_n(t) * b_zeta drives the
/// transverse coordinates while x_n(t) = x_n(0) - (1 - zeta) t drifts.
struct LinearLocalModel {
  VectorXd lambda_diag;    // n-1 objective slopes, positive when convergent
  VectorXd tangent_slopes; // n-1 central-path slopes l_i
  MatrixXd a_matrix;       // (n-1) x (n-1)
  VectorXd b_vector;       // n-1
  MatrixXd lambda_zeta;    // diag(lambda) - (1 - zeta) * a_matrix
  VectorXd b_zeta;         // lambda_i * l_i + (1 - zeta) * b_i
};

/// Assembles lambda_zeta and b_zeta for the given barrier weight.
LinearLocalModel make_linear_local_model(const VectorXd& lambda_diag,
                                         const VectorXd& tangent_slopes,
                                         const MatrixXd& a_matrix,
                                         const VectorXd& b_vector, double zeta);

/// cos_theta between the normalized gradients and membership of the
/// mu-neighborhood (cos_theta < -mu). Throws InputError on zero gradients.
CentralityReport centrality(const VectorXd& grad_f, const VectorXd& grad_dir,
                            double zeta, double mu);

/// First-order stationarity report at a point. Single constraint: multiplier
/// and residual against grad_g. Multiple constraints: against the barrier
/// gradient (requires a defined barrier). Throws InputError when the needed
/// gradient vanishes or the barrier is undefined with m > 1.
KktReport kkt_report(const Evaluation& evaluation, const BarrierState& barrier);

/// Projects the blended curvature H_f/|grad_f| + H_g/|grad_g| onto the
/// hyperplane orthogonal to grad_f and classifies its definiteness with an
/// eigenvalue margin of degeneracy_tol * (1 + max |eig|). Requires n >= 2.
RelativeConvexityReport relative_convexity(const VectorXd& grad_f,
                                           const VectorXd& grad_g_or_phi,
                                           const MatrixXd& hess_f,
                                           const MatrixXd& hess_g_or_phi,
                                           double degeneracy_tol = 1e-8);

/// Closed-form state of the linearized trajectory at time t from x0
/// (transverse coordinates first, drifting coordinate last). zeta must match
/// the weight the model was assembled with. Throws DegeneracyError when
/// lambda_zeta is numerically singular.
VectorXd linear_local_model_solution(const LinearLocalModel& model,
                                     const VectorXd& x0, double zeta, double t);

/// Central-difference Hessian of the objective (which = -1) or of constraint
/// `which` at x with step h. Symmetrized. Throws InputError for a bad index
/// and EvaluationError on non-finite samples.
MatrixXd hessian_fd(const Problem& problem, int which, const VectorXd& x,
                    double h);

}  // namespace ngopt
