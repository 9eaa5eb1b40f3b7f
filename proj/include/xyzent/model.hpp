#pragma once

// Two-qubit XYZ Heisenberg model with homogeneous field B, inhomogeneous
// field b and a z-oriented Dzyaloshinskii-Moriya coupling D:
//
//   H = 1/2 [ Jx sx sx + Jy sy sy + Jz sz sz + (B+b) sz(1) + (B-b) sz(2)
//             + D (sx(1) sy(2) - sy(1) sx(2)) ]
//
// Basis order is |00>, |01>, |10>, |11> with sz|0> = +|0>. Boltzmann's
// constant is absorbed into the temperature, so kT and every coupling share
// one energy unit.

#include "xyzent/linalg.hpp"

namespace xyzent {

struct ModelParams {
  double j_x = 0.0;
  double j_y = 0.0;
  double j_z = 0.0;
  double field_B = 0.0;  // homogeneous
  double field_b = 0.0;  // inhomogeneous
  double dm_D = 0.0;

  bool is_finite() const;
  /// Largest coupling magnitude.
  double max_abs() const;
  /// Throws std::invalid_argument naming the first non-finite field.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Combinations that the spectrum and the thermal state are written in.
struct Derived {
  double j_plus = 0.0;   // (Jx + Jy) / 2
  double j_minus = 0.0;  // (Jx - Jy) / 2
  double mu = 0.0;       // sqrt(B^2 + J-^2)
  double nu = 0.0;       // sqrt(b^2 + J+^2 + D^2)
};

Derived derive(const ModelParams& params);

/// Thermal energy kT, strictly positive.
class Temperature {
 public:
  explicit Temperature(double kT);
  double value() const { return kT_; }

 private:
  double kT_;
};

using Hermitian4 = Matrix4;

Hermitian4 build_hamiltonian(const ModelParams& params);

}  // namespace xyzent
