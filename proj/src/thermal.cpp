#include "xyzent/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "xyzent/spectral.hpp"

namespace xyzent {

DensityMatrix DensityMatrix::from_pure(const Vector4& psi) {
  const Vector4 v = normalized(psi);
  return {Matrix4::outer(v, v)};
}

DensityMatrix DensityMatrix::checked(const Matrix4& m, double tol) {
  if (m.hermiticity_defect() > tol) throw std::invalid_argument("density matrix is not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol)
    throw std::invalid_argument("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  const HermitianEigen eig = hermitian_eigen(m);
  if (eig.values[0] < -tol)
    throw std::invalid_argument("density matrix has negative eigenvalue " + std::to_string(eig.values[0]));
  return {m};
}

double PartitionValue::value() const { return std::exp(log_z); }

double ThermalBlocks::ch(double x) { return 0.5 * (1.0 + std::exp(-2.0 * x)); }

double ThermalBlocks::sh(double x) { return -0.5 * std::expm1(-2.0 * x); }

double ThermalBlocks::shc(double x) {
  if (x < 1e-8) {
    const double x2 = x * x;
    return std::exp(-x) * (1.0 + x2 / 6.0 + x2 * x2 / 120.0);
  }
  return sh(x) / x;
}

ThermalBlocks thermal_blocks(const ModelParams& params, Temperature kT) {
  ThermalBlocks t;
  t.kT = kT.value();
  t.derived = derive(params);
  t.x1 = t.derived.mu / t.kT;
  t.x2 = t.derived.nu / t.kT;
  const double half = 0.5 * params.j_z / t.kT;
  const double e1 = -half + t.x1;
  const double e2 = half + t.x2;
  t.log_scale = std::max(e1, e2);
  t.w1 = std::exp(e1 - t.log_scale);
  t.w2 = std::exp(e2 - t.log_scale);
  t.z_scaled = 2.0 * (t.w1 * ThermalBlocks::ch(t.x1) + t.w2 * ThermalBlocks::ch(t.x2));
  return t;
}

PartitionValue partition_function(const ModelParams& params, Temperature kT) {
  const Derived d = derive(params);
  const double t = kT.value();
  const double largest = std::max({0.5 * std::abs(params.j_z), d.mu, d.nu}) / t;
  if (largest <= 700.0) {
    const double half = 0.5 * params.j_z / t;
    const double z = 2.0 * (std::exp(-half) * std::cosh(d.mu / t) + std::exp(half) * std::cosh(d.nu / t));
    return {std::log(z), false};
  }
  const ThermalBlocks b = thermal_blocks(params, kT);
  return {b.log_scale + std::log(b.z_scaled), true};
}

DensityMatrix gibbs_closed(const ModelParams& params, Temperature kT) {
  const ThermalBlocks t = thermal_blocks(params, kT);
  const double ch1 = ThermalBlocks::ch(t.x1), shc1 = ThermalBlocks::shc(t.x1);
  const double ch2 = ThermalBlocks::ch(t.x2), shc2 = ThermalBlocks::shc(t.x2);
  const double inv_z = 1.0 / t.z_scaled;
  const double f1 = t.w1 * inv_z, f2 = t.w2 * inv_z;
  const double beta_B = params.field_B / t.kT;
  const double beta_b = params.field_b / t.kT;

  Matrix4 rho;
  rho(0, 0) = f1 * (ch1 - beta_B * shc1);
  rho(3, 3) = f1 * (ch1 + beta_B * shc1);
  rho(0, 3) = -f1 * (t.derived.j_minus / t.kT) * shc1;
  rho(3, 0) = rho(0, 3);

  rho(1, 1) = f2 * (ch2 - beta_b * shc2);
  rho(2, 2) = f2 * (ch2 + beta_b * shc2);
  rho(1, 2) = -f2 * shc2 * Complex(t.derived.j_plus, params.dm_D) / t.kT;
  rho(2, 1) = std::conj(rho(1, 2));
  return {rho};
}

DensityMatrix gibbs_numeric(const Hermitian4& h, Temperature kT) {
  const HermitianEigen eig = hermitian_eigen(h);
  const double e_min = eig.values[0];
  std::array<double, 4> w{};
  double z = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    w[k] = std::exp(-(eig.values[k] - e_min) / kT.value());
    z += w[k];
  }
  Matrix4 rho;
  for (std::size_t k = 0; k < 4; ++k) {
    if (w[k] == 0.0) continue;
    const Vector4 v = eig.vector(k);
    rho = rho + Complex(w[k] / z) * Matrix4::outer(v, v);
  }
  return {rho};
}

}  // namespace xyzent
