#pragma once

// Dense 4x4 complex linear algebra for two-qubit operators.
//
// Everything here is fixed-size and allocation-free. The eigensolver and the
// singular value routine are cyclic Jacobi schemes, which are accurate to a
// few ulps for matrices of this size and need no external dependency.

#include <array>
#include <complex>
#include <cstddef>

namespace xyzent {

using Complex = std::complex<double>;
using Vector4 = std::array<Complex, 4>;

struct Matrix4 {
  std::array<std::array<Complex, 4>, 4> m{};

  Complex& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

  static Matrix4 zero() { return {}; }
  static Matrix4 identity();
  static Matrix4 diagonal(const std::array<double, 4>& d);
  /// |a><b|
  static Matrix4 outer(const Vector4& a, const Vector4& b);
  /// Kronecker product of two 2x2 matrices, first factor acts on qubit 1.
  static Matrix4 kron(const std::array<std::array<Complex, 2>, 2>& a,
                      const std::array<std::array<Complex, 2>, 2>& b);

  Matrix4 adjoint() const;
  Matrix4 conjugate() const;
  Matrix4 transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  /// max_ij |a_ij - conj(a_ji)|
  double hermiticity_defect() const;
  double max_abs() const;
};

Matrix4 operator+(const Matrix4& a, const Matrix4& b);
Matrix4 operator-(const Matrix4& a, const Matrix4& b);
Matrix4 operator*(const Matrix4& a, const Matrix4& b);
Matrix4 operator*(Complex s, const Matrix4& a);
Vector4 operator*(const Matrix4& a, const Vector4& v);

Complex inner(const Vector4& a, const Vector4& b);  // <a|b>
double norm(const Vector4& v);
Vector4 normalized(const Vector4& v);

struct HermitianEigen {
  std::array<double, 4> values{};
  Matrix4 vectors;  // column k is the eigenvector for values[k]
  Vector4 vector(std::size_t k) const;
};

/// Eigendecomposition of a Hermitian matrix by complex cyclic Jacobi.
/// Eigenpairs come back in ascending order of eigenvalue; ties keep
/// the order in which the rotations left them.
HermitianEigen hermitian_eigen(const Matrix4& a);

/// Singular values (descending) by one-sided Jacobi. Absolute accuracy is
/// of order eps * ||a||, including for the smallest singular values.
std::array<double, 4> singular_values(const Matrix4& a);

}  // namespace xyzent
