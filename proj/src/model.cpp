#include "xyzent/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace xyzent {

bool ModelParams::is_finite() const {
  return std::isfinite(j_x) && std::isfinite(j_y) && std::isfinite(j_z) && std::isfinite(field_B) &&
         std::isfinite(field_b) && std::isfinite(dm_D);
}

double ModelParams::max_abs() const {
  return std::max({std::abs(j_x), std::abs(j_y), std::abs(j_z), std::abs(field_B), std::abs(field_b),
                   std::abs(dm_D)});
}

void ModelParams::validate() const {
  const auto check = [](double v, const char* name) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string("model parameter ") + name + " is not finite");
  };
  check(j_x, "j_x");
  check(j_y, "j_y");
  check(j_z, "j_z");
  check(field_B, "B");
  check(field_b, "b");
  check(dm_D, "D");
}

Derived derive(const ModelParams& params) {
  params.validate();
  Derived d;
  d.j_plus = 0.5 * (params.j_x + params.j_y);
  d.j_minus = 0.5 * (params.j_x - params.j_y);
  d.mu = std::hypot(params.field_B, d.j_minus);
  d.nu = std::hypot(params.field_b, d.j_plus, params.dm_D);
  return d;
}

Temperature::Temperature(double kT) : kT_(kT) {
  if (!(kT > 0.0) || !std::isfinite(kT))
    throw std::invalid_argument("temperature kT must be finite and > 0, got " + std::to_string(kT));
}

Hermitian4 build_hamiltonian(const ModelParams& params) {
  const Derived d = derive(params);
  const double hz = 0.5 * params.j_z;
  Hermitian4 h;
  h(0, 0) = hz + params.field_B;
  h(0, 3) = d.j_minus;
  h(1, 1) = -hz + params.field_b;
  h(1, 2) = Complex(d.j_plus, params.dm_D);
  h(2, 1) = Complex(d.j_plus, -params.dm_D);
  h(2, 2) = -hz - params.field_b;
  h(3, 0) = d.j_minus;
  h(3, 3) = hz - params.field_B;
  return h;
}

}  // namespace xyzent
