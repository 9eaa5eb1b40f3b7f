#include "xyzent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace xyzent {

double ConcurrenceResult::margin() const { return lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]; }

Matrix4 sigma_yy() {
  Matrix4 y;
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

Matrix4 spin_flipped(const DensityMatrix& rho) {
  const Matrix4 y = sigma_yy();
  return y * rho.entries.conjugate() * y;
}

Matrix4 spin_flip(const DensityMatrix& rho) { return rho.entries * spin_flipped(rho); }

namespace {

constexpr double kInvalidEigenvalue = -1e-9;

}  // namespace

ConcurrenceResult wootters_concurrence(const DensityMatrix& rho) {
  const HermitianEigen eig = hermitian_eigen(rho.entries);
  if (eig.values[0] < kInvalidEigenvalue)
    throw std::invalid_argument("not a density matrix: eigenvalue " + std::to_string(eig.values[0]));

  Matrix4 v;
  for (std::size_t k = 0; k < 4; ++k) {
    const double s = std::sqrt(std::max(eig.values[k], 0.0));
    for (std::size_t i = 0; i < 4; ++i) v(i, k) = eig.vectors(i, k) * s;
  }
  const Matrix4 tau = v.transpose() * sigma_yy() * v;
  return concurrence_from_lambdas(singular_values(tau));
}

ConcurrenceResult concurrence_from_lambdas(std::array<double, 4> lambdas) {
  for (double& l : lambdas) l = std::max(l, 0.0);
  std::stable_sort(lambdas.begin(), lambdas.end(), std::greater<>());
  ConcurrenceResult r;
  r.lambdas = lambdas;
  r.concurrence = std::max(r.margin(), 0.0);
  return r;
}

namespace {

// | sqrt(p^2 + q^2) -+ q |, the small root taken without cancellation.
std::array<double, 2> lambda_pair(double p, double q) {
  const double big = std::hypot(p, q) + std::abs(q);
  const double small = big > 0.0 ? p * (p / big) : 0.0;  // exact tie when q = 0
  return q >= 0.0 ? std::array<double, 2>{small, big} : std::array<double, 2>{big, small};
}

}  // namespace

std::array<double, 4> closed_form_lambdas(const ModelParams& params, Temperature kT) {
  const ThermalBlocks t = thermal_blocks(params, kT);
  const double f1 = t.w1 / t.z_scaled;
  const double f2 = t.w2 / t.z_scaled;
  const double transverse = std::hypot(t.derived.j_plus, params.dm_D);

  const auto a = lambda_pair(std::exp(-t.x1), t.derived.j_minus / t.kT * ThermalBlocks::shc(t.x1));
  const auto b = lambda_pair(std::exp(-t.x2), transverse / t.kT * ThermalBlocks::shc(t.x2));
  return {f1 * a[0], f1 * a[1], f2 * b[0], f2 * b[1]};
}

ConcurrenceResult numeric_concurrence(const ModelParams& params, Temperature kT) {
  return wootters_concurrence(gibbs_numeric(build_hamiltonian(params), kT));
}

ConcurrenceResult closed_concurrence(const ModelParams& params, Temperature kT) {
  return concurrence_from_lambdas(closed_form_lambdas(params, kT));
}

}  // namespace xyzent
