#pragma once

#include <optional>

#include "ngopt/problem.hpp"

namespace ngopt {

/// Parameters of the blended descent/centering direction field.
struct DirectionParams {
  double zeta = 0.0;            // barrier weight, in [0, 1)
  double grad_zero_tol = 1e-12; // scaled by (1 + |grad_f|) before use
};

enum class DirectionBranch {
  BarrierBranch,    // s = -grad_f/|grad_f| - zeta * grad_phi/|grad_phi|
  SafeguardBranch,  // s = -grad_f (barrier gradient numerically zero)
  SingleConstraint, // s = -grad_f/|grad_f| - zeta * grad_g/|grad_g|
};

struct DirectionResult {
  VectorXd s;      // un-normalized direction
  VectorXd s_unit; // s/|s| when |s| > tolerance, else the zero vector
  DirectionBranch branch = DirectionBranch::BarrierBranch;
  // Cosine of the angle between the normalized objective gradient and the
  // normalized constraint/barrier gradient; empty on the safeguard branch.
  std::optional<double> cos_theta;
};

/// The same direction family expressed through the two extreme descent
/// directions of the pair (grad_f, grad_g): v1 bisects (-grad_f, +grad_g),
/// v2 bisects (-grad_f, -grad_g), and the combination weight c >= 1 tilts
/// the result from pure descent (c = 1) toward the constraint boundary's
/// tangent as c grows.
struct MsdmDecomposition {
  VectorXd v1;
  VectorXd v2;
  double sigma1 = 0.0; // sensitivity of v1's combined first-order change
  double sigma2 = 0.0;
  double cos_alpha1 = 0.0; // angle between v1 and -grad_f/|grad_f|
  double cos_alpha2 = 0.0;
  VectorXd s_c; // cos_alpha1 * v1 + c * cos_alpha2 * v2
};

/// Blend of normalized objective and single-constraint gradients:
/// s = -grad_f/|grad_f| - zeta * grad_g/|grad_g|. Throws CriticalPointSignal
/// (ConstraintCriticalSignal) when |grad_f| (|grad_g|) is below tolerance.
DirectionResult direction_single(const VectorXd& grad_f, const VectorXd& grad_g,
                                 const DirectionParams& params);

/// Blend against the barrier gradient: s = -grad_f/|grad_f| -
/// zeta * grad_phi/|grad_phi|. Falls back to s = -grad_f (un-normalized,
/// SafeguardBranch) when the barrier gradient is below tolerance. Requires a
/// defined barrier (strictly feasible point); throws CriticalPointSignal
/// when |grad_f| is below tolerance.
DirectionResult direction_multi(const Evaluation& evaluation,
                                const BarrierState& barrier,
                                const DirectionParams& params);

/// Two-direction decomposition for one active constraint; c >= 1. Verifies
/// itself against an explicit singular value decomposition of the stacked
/// normalized gradients. Throws DegenerateGeometry when the normalized
/// gradients are parallel within 1e-12.
MsdmDecomposition msdm_direction(const VectorXd& grad_f, const VectorXd& grad_g,
                                 double c);

/// Barrier weight equivalent to combination weight c: (c - 1) / (c + 1).
double zeta_from_c(double c);

}  // namespace ngopt
