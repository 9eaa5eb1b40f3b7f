#include "xyzent/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace xyzent {

std::array<double, 4> Spectrum::energies() const {
  return {levels[0].energy, levels[1].energy, levels[2].energy, levels[3].energy};
}

namespace {

// Eigenvector of the 2x2 block [[h + s, c], [conj(c), h - s]] for the
// eigenvalue h + sign * r, r = sqrt(s^2 + |c|^2) > 0. Two equivalent forms
// exist, (c, sign*r - s) and (sign*r + s, conj(c)); the longer one is used
// so that a vanishing first form (c = 0, s = -sign*r) stays well defined.
std::array<Complex, 2> block_vector(double s, Complex c, double r, double sign) {
  const std::array<Complex, 2> u{c, Complex(sign * r - s)};
  const std::array<Complex, 2> v{Complex(sign * r + s), std::conj(c)};
  const double nu = std::norm(u[0]) + std::norm(u[1]);
  const double nv = std::norm(v[0]) + std::norm(v[1]);
  const auto& w = nu >= nv ? u : v;
  const double n = std::sqrt(std::max(nu, nv));
  return {w[0] / n, w[1] / n};
}

}  // namespace

Spectrum analytic_spectrum(const ModelParams& params) {
  const Derived d = derive(params);
  const double hz = 0.5 * params.j_z;
  Spectrum sp;
  sp.levels[0].energy = hz - d.mu;
  sp.levels[1].energy = hz + d.mu;
  sp.levels[2].energy = -hz - d.nu;
  sp.levels[3].energy = -hz + d.nu;

  if (d.mu == 0.0) {
    sp.levels[0].state = {1.0, 0.0, 0.0, 0.0};
    sp.levels[1].state = {0.0, 0.0, 0.0, 1.0};
  } else {
    const auto lo = block_vector(params.field_B, d.j_minus, d.mu, -1.0);
    const auto hi = block_vector(params.field_B, d.j_minus, d.mu, +1.0);
    sp.levels[0].state = {lo[0], 0.0, 0.0, lo[1]};
    sp.levels[1].state = {hi[0], 0.0, 0.0, hi[1]};
  }

  if (d.nu == 0.0) {
    sp.levels[2].state = {0.0, 1.0, 0.0, 0.0};
    sp.levels[3].state = {0.0, 0.0, 1.0, 0.0};
  } else {
    const Complex c(d.j_plus, params.dm_D);
    const auto lo = block_vector(params.field_b, c, d.nu, -1.0);
    const auto hi = block_vector(params.field_b, c, d.nu, +1.0);
    sp.levels[2].state = {0.0, lo[0], lo[1], 0.0};
    sp.levels[3].state = {0.0, hi[0], hi[1], 0.0};
  }
  return sp;
}

Spectrum numeric_spectrum(const Hermitian4& h) {
  const HermitianEigen eig = hermitian_eigen(h);
  Spectrum sp;
  for (std::size_t k = 0; k < 4; ++k) {
    Vector4 v = normalized(eig.vector(k));
    for (Complex& x : v) {
      if (std::abs(x) > 1e-12) {
        const double r = std::abs(x);
        const Complex phase = std::conj(x) / r;
        for (auto& y : v) y *= phase;
        x = r;  // exactly real, free of rotation roundoff
        break;
      }
    }
    sp.levels[k] = {eig.values[k], v};
  }
  return sp;
}

}  // namespace xyzent
