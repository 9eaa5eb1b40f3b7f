#pragma once

// Gibbs state rho = exp(-H/kT) / Z of the two-qubit model.

#include "xyzent/model.hpp"

namespace xyzent {

struct DensityMatrix {
  Matrix4 entries;

  /// |psi><psi| for a (not necessarily normalized) state vector.
  static DensityMatrix from_pure(const Vector4& psi);
  /// Wraps a matrix after checking Hermiticity, unit trace and positivity
  /// to within tol. Throws std::invalid_argument otherwise.
  static DensityMatrix checked(const Matrix4& m, double tol = 1e-9);
};

/// Partition function kept in log form; value() overflows to +inf only when
/// the true Z exceeds the double range.
struct PartitionValue {
  double log_z = 0.0;
  /// True when the direct cosh formula would overflow and the log-space
  /// route was taken instead.
  bool log_space = false;

  double value() const;
};

/// Shared closed-form ingredients of exp(-H/kT). With x1 = mu/kT,
/// x2 = nu/kT and scale s = max(-Jz/2kT + x1, Jz/2kT + x2):
///   w1 = exp(-Jz/2kT + x1 - s),  w2 = exp(Jz/2kT + x2 - s),
/// so that e^{-Jz/2kT} cosh(x1) = e^s * w1 * ch(x1) with ch(x) = e^{-x} cosh x,
/// and likewise for sinh. All quantities stay O(1) for any kT > 0.
struct ThermalBlocks {
  double kT = 1.0;
  Derived derived;
  double x1 = 0.0, x2 = 0.0;
  double w1 = 0.0, w2 = 0.0;
  double log_scale = 0.0;
  double z_scaled = 0.0;  // Z * e^{-s}

  /// e^{-x} cosh x
  static double ch(double x);
  /// e^{-x} sinh x
  static double sh(double x);
  /// e^{-x} sinh(x) / x, with the series near x = 0
  static double shc(double x);
};

ThermalBlocks thermal_blocks(const ModelParams& params, Temperature kT);

PartitionValue partition_function(const ModelParams& params, Temperature kT);

/// Entries of exp(-H/kT)/Z from the 2x2 block exponentials in cosh/sinh form.
DensityMatrix gibbs_closed(const ModelParams& params, Temperature kT);

/// sum_i exp(-(E_i - E_min)/kT) |psi_i><psi_i| / sum_i exp(-(E_i - E_min)/kT)
/// over a numeric eigendecomposition of h.
DensityMatrix gibbs_numeric(const Hermitian4& h, Temperature kT);

}  // namespace xyzent
