#pragma once

// Shared random draws and independent reference computations for the tests.
// Nothing here goes through the library's eigensolver.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "xyzent/model.hpp"
#include "xyzent/thermal.hpp"

namespace xyzent::test {

using Mat2 = std::array<std::array<Complex, 2>, 2>;

inline Mat2 pauli_x() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
inline Mat2 pauli_y() { return {{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}}; }
inline Mat2 pauli_z() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }
inline Mat2 id2() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }

/// H assembled term by term from Kronecker products of Pauli matrices.
inline Matrix4 pauli_hamiltonian(const ModelParams& p) {
  const auto k = [](const Mat2& a, const Mat2& b) { return Matrix4::kron(a, b); };
  Matrix4 h = Complex(p.j_x) * k(pauli_x(), pauli_x()) + Complex(p.j_y) * k(pauli_y(), pauli_y()) +
              Complex(p.j_z) * k(pauli_z(), pauli_z()) + Complex(p.field_B + p.field_b) * k(pauli_z(), id2()) +
              Complex(p.field_B - p.field_b) * k(id2(), pauli_z()) +
              Complex(p.dm_D) * (k(pauli_x(), pauli_y()) - k(pauli_y(), pauli_x()));
  return Complex(0.5) * h;
}

/// exp(a) by scaling and squaring of a Taylor series.
inline Matrix4 expm(const Matrix4& a) {
  int squarings = 0;
  double n = a.max_abs() * 4.0;
  while (n > 0.5) {
    n *= 0.5;
    ++squarings;
  }
  const Matrix4 x = Complex(std::ldexp(1.0, -squarings)) * a;
  Matrix4 term = Matrix4::identity();
  Matrix4 sum = Matrix4::identity();
  for (int k = 1; k < 30; ++k) {
    term = Complex(1.0 / k) * (term * x);
    sum = sum + term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// exp(-H/kT) / Tr. H is first shifted by a Gershgorin lower bound on its
/// spectrum so the unnormalized exponential stays in range.
inline Matrix4 gibbs_oracle(const Matrix4& h, double kT) {
  double shift = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 4; ++i) {
    double r = 0.0;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) r += std::abs(h(i, j));
    shift = std::min(shift, h(i, i).real() - r);
  }
  const Matrix4 e = expm(Complex(-1.0 / kT) * (h - Complex(shift) * Matrix4::identity()));
  return Complex(1.0 / e.trace().real()) * e;
}

/// Concurrence of a state with the X pattern (nonzero only on the diagonal
/// and the anti-diagonal): 2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)).
inline double x_state_concurrence(const Matrix4& r) {
  const double a = std::abs(r(0, 3)) - std::sqrt(r(1, 1).real() * r(2, 2).real());
  const double b = std::abs(r(1, 2)) - std::sqrt(r(0, 0).real() * r(3, 3).real());
  return 2.0 * std::max({0.0, a, b});
}

struct Draws {
  std::mt19937_64 rng;
  explicit Draws(std::uint64_t seed = 20240611) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  /// Couplings, fields and D uniform in [-4, 4].
  ModelParams params() {
    return {uniform(-4, 4), uniform(-4, 4), uniform(-4, 4), uniform(-4, 4), uniform(-4, 4), uniform(-4, 4)};
  }
  double kT() { return log_uniform(0.05, 5.0); }

  Mat2 unitary2() {
    const double a = uniform(0, 2 * M_PI), b = uniform(0, 2 * M_PI), c = uniform(0, 2 * M_PI);
    const double t = uniform(0, M_PI / 2);
    const Complex ea = std::polar(1.0, a), eb = std::polar(1.0, b), ec = std::polar(1.0, c);
    return {{{ea * std::cos(t), eb * std::sin(t)}, {-std::conj(eb) * ec * std::sin(t), std::conj(ea) * ec * std::cos(t)}}};
  }

  Vector4 state() {
    Vector4 v;
    for (auto& x : v) x = Complex(uniform(-1, 1), uniform(-1, 1));
    return v;
  }

  Matrix4 hermitian(double scale = 1.0) {
    Matrix4 a;
    for (std::size_t i = 0; i < 4; ++i) {
      a(i, i) = uniform(-scale, scale);
      for (std::size_t j = i + 1; j < 4; ++j) {
        a(i, j) = Complex(uniform(-scale, scale), uniform(-scale, scale));
        a(j, i) = std::conj(a(i, j));
      }
    }
    return a;
  }
};

inline double max_diff(const Matrix4& a, const Matrix4& b) { return (a - b).max_abs(); }

}  // namespace xyzent::test
