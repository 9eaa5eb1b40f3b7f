#include "xyzent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace xyzent {

Matrix4 Matrix4::identity() {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i) r(i, i) = 1.0;
  return r;
}

Matrix4 Matrix4::diagonal(const std::array<double, 4>& d) {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i) r(i, i) = d[i];
  return r;
}

Matrix4 Matrix4::outer(const Vector4& a, const Vector4& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = a[i] * std::conj(b[j]);
  return r;
}

Matrix4 Matrix4::kron(const std::array<std::array<Complex, 2>, 2>& a,
                      const std::array<std::array<Complex, 2>, 2>& b) {
  Matrix4 r;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1)
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          r(2 * i1 + i2, 2 * j1 + j2) = a[i1][j1] * b[i2][j2];
  return r;
}

Matrix4 Matrix4::adjoint() const {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::conj(m[j][i]);
  return r;
}

Matrix4 Matrix4::conjugate() const {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::conj(m[i][j]);
  return r;
}

Matrix4 Matrix4::transpose() const {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = m[j][i];
  return r;
}

Complex Matrix4::trace() const { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }

double Matrix4::frobenius_norm() const {
  double s = 0.0;
  for (const auto& row : m)
    for (const auto& x : row) s += std::norm(x);
  return std::sqrt(s);
}

double Matrix4::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) d = std::max(d, std::abs(m[i][j] - std::conj(m[j][i])));
  return d;
}

double Matrix4::max_abs() const {
  double d = 0.0;
  for (const auto& row : m)
    for (const auto& x : row) d = std::max(d, std::abs(x));
  return d;
}

Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix4 operator-(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Matrix4 operator*(Complex s, const Matrix4& a) {
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = s * a(i, j);
  return r;
}

Vector4 operator*(const Matrix4& a, const Vector4& v) {
  Vector4 r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i] += a(i, j) * v[j];
  return r;
}

Complex inner(const Vector4& a, const Vector4& b) {
  Complex s{};
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const Vector4& v) { return std::sqrt(std::real(inner(v, v))); }

Vector4 normalized(const Vector4& v) {
  const double n = norm(v);
  Vector4 r = v;
  for (auto& x : r) x /= n;
  return r;
}

Vector4 HermitianEigen::vector(std::size_t k) const {
  return {vectors(0, k), vectors(1, k), vectors(2, k), vectors(3, k)};
}

namespace {

// Unitary 2x2 acting on the (p, q) plane that diagonalizes the Hermitian
// block [[app, apq], [conj(apq), aqq]]. First rotates the phase of apq away,
// then applies the classic real Jacobi rotation.
struct PlaneRotation {
  Complex gpp, gpq, gqp, gqq;
};

PlaneRotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double mag = std::abs(apq);
  const Complex phase_bar = std::conj(apq) / mag;
  const double tau = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(tau) > 1e150) {
    t = 0.5 / tau;
  } else {
    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  return {c, s, -s * phase_bar, c * phase_bar};
}

constexpr int kMaxSweeps = 64;
constexpr double kRelativeOffTol = 1e-18;

}  // namespace

HermitianEigen hermitian_eigen(const Matrix4& input) {
  Matrix4 a = input;
  Matrix4 v = Matrix4::identity();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (mag <= kRelativeOffTol * std::sqrt(std::abs(app) * std::abs(aqq))) continue;
        rotated = true;
        const PlaneRotation g = jacobi_rotation(app, aqq, apq);

        // a <- a G (columns p, q)
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * g.gpp + akq * g.gqp;
          a(k, q) = akp * g.gpq + akq * g.gqq;
        }
        // a <- G^H a (rows p, q)
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(g.gpp) * apk + std::conj(g.gqp) * aqk;
          a(q, k) = std::conj(g.gpq) * apk + std::conj(g.gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * g.gpp + vkq * g.gqp;
          v(k, q) = vkp * g.gpq + vkq * g.gqq;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < 4; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::array<double, 4> singular_values(const Matrix4& input) {
  Matrix4 a = input;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma{};
        for (std::size_t k = 0; k < 4; ++k) {
          alpha += std::norm(a(k, p));
          beta += std::norm(a(k, q));
          gamma += std::conj(a(k, p)) * a(k, q);
        }
        const double mag = std::abs(gamma);
        if (mag == 0.0 || mag <= kRelativeOffTol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const PlaneRotation g = jacobi_rotation(alpha, beta, gamma);
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * g.gpp + akq * g.gqp;
          a(k, q) = akp * g.gpq + akq * g.gqq;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<double, 4> s{};
  for (std::size_t j = 0; j < 4; ++j) {
    double c = 0.0;
    for (std::size_t k = 0; k < 4; ++k) c += std::norm(a(k, j));
    s[j] = std::sqrt(c);
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

}  // namespace xyzent
