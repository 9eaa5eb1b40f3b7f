#pragma once

// Wootters concurrence of a two-qubit state.

#include <array>

#include "xyzent/thermal.hpp"

namespace xyzent {

struct ConcurrenceResult {
  std::array<double, 4> lambdas{};  // descending
  double concurrence = 0.0;

  /// lambda1 - lambda2 - lambda3 - lambda4 before clamping at zero.
  double margin() const;
};

/// sigma_y (x) sigma_y in the computational basis.
Matrix4 sigma_yy();

/// rho~ = (sy (x) sy) rho* (sy (x) sy)
Matrix4 spin_flipped(const DensityMatrix& rho);

/// The product rho * rho~ whose eigenvalues are the squared lambdas.
Matrix4 spin_flip(const DensityMatrix& rho);

/// Lambdas come from the singular values of tau = V^T (sy (x) sy) V, where
/// rho = V V^dagger with V = U diag(sqrt(p)). tau^dagger tau is similar to
/// rho rho~, and the one-sided Jacobi SVD keeps small lambdas accurate.
/// Throws std::invalid_argument when rho has an eigenvalue below -1e-9.
ConcurrenceResult wootters_concurrence(const DensityMatrix& rho);

/// Sorts the given lambdas descending and applies C = max(l1 - l2 - l3 - l4, 0).
ConcurrenceResult concurrence_from_lambdas(std::array<double, 4> lambdas);

/// Closed-form lambdas of the Gibbs state, in label order l1..l4:
///   l1,2 = e^{-Jz/2kT}/Z | sqrt(1 + (J-/mu)^2 sinh^2(mu/kT)) -+ (J-/mu) sinh(mu/kT) |
///   l3,4 = e^{+Jz/2kT}/Z | sqrt(1 + (J+^2+D^2)/nu^2 sinh^2(nu/kT)) -+ sqrt(J+^2+D^2)/nu sinh(nu/kT) |
std::array<double, 4> closed_form_lambdas(const ModelParams& params, Temperature kT);

/// Full numeric route: build H, exponentiate through its numeric spectrum,
/// then run the Wootters procedure.
ConcurrenceResult numeric_concurrence(const ModelParams& params, Temperature kT);

/// Closed-form route built from closed_form_lambdas.
ConcurrenceResult closed_concurrence(const ModelParams& params, Temperature kT);

}  // namespace xyzent
