#pragma once

#include <array>

#include "xyzent/model.hpp"

namespace xyzent {

struct Level {
  double energy = 0.0;
  Vector4 state{};
};

struct Spectrum {
  std::array<Level, 4> levels{};

  std::array<double, 4> energies() const;
};

/// Closed-form spectrum, labelled
///   E1 = Jz/2 - mu,  E2 = Jz/2 + mu,  E3 = -Jz/2 - nu,  E4 = -Jz/2 + nu.
/// The H = 0 block {|00>,|11>} gives E1/E2 with states ~ (J-, 0, 0, -(B -+ mu));
/// the {|01>,|10>} block gives E3/E4 with states ~ (0, J+ + iD, -(b -+ nu), 0).
/// States are normalized numerically. When mu = 0 (or nu = 0) the block is a
/// multiple of the identity and the basis states themselves are returned.
Spectrum analytic_spectrum(const ModelParams& params);

/// Jacobi eigendecomposition of an arbitrary Hermitian 4x4. Levels ascend in
/// energy; each state is phase-fixed so its first nonzero component is real
/// and positive.
Spectrum numeric_spectrum(const Hermitian4& h);

}  // namespace xyzent
