#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace qchan {

using complexd = std::complex<double>;

/// Dense square complex matrix, row-major. Everything in this project is
/// 2x2 or 4x4, so no attempt is made to be clever about storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }
  complexd& operator()(int i, int j) { return e_[i * dim_ + j]; }
  const complexd& operator()(int i, int j) const { return e_[i * dim_ + j]; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(complexd s);

 private:
  int dim_ = 0;
  std::vector<complexd> e_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(complexd s, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Pauli matrix sigma_k, k in {1,2,3}.
const ComplexMatrix& pauli(int k);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; the first factor owns the slow (block) index:
/// (a (x) b)[(i*db+k),(j*db+l)] = a(i,j)*b(k,l). All bipartite code in the
/// project relies on this one convention.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transpose on the second tensor factor of a 4x4 matrix (2 (x) 2 split).
ComplexMatrix partial_transpose(const ComplexMatrix& m);

/// Trace out the second tensor factor of a 4x4 matrix, leaving 2x2.
ComplexMatrix partial_trace_second(const ComplexMatrix& m);

complexd trace(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tol);

struct HermitianSpectrum {
  std::vector<double> eigenvalues;            // ascending
  std::optional<ComplexMatrix> eigenvectors;  // columns, orthonormal
};

/// Cyclic complex Jacobi diagonalization. Input must be Hermitian within
/// 1e-10 in max-entry norm; it is symmetrized before iterating. Sweeps stop
/// once the off-diagonal Frobenius norm drops below 1e-13 (cap: 100 sweeps).
HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m,
                                        bool want_vectors = false);

/// Sum of |eigenvalue| of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

struct Vec3 {
  std::array<double, 3> c{};
  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }
  double norm() const;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);

struct Mat3 {
  std::array<double, 9> e{};
  static Mat3 identity();
  double& operator()(int i, int j) { return e[i * 3 + j]; }
  double operator()(int i, int j) const { return e[i * 3 + j]; }
};

Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);
double max_abs_diff(const Mat3& a, const Mat3& b);

struct Mat4 {
  std::array<double, 16> e{};
  static Mat4 identity();
  double& operator()(int i, int j) { return e[i * 4 + j]; }
  double operator()(int i, int j) const { return e[i * 4 + j]; }
};

Mat4 operator*(const Mat4& a, const Mat4& b);
double max_abs_diff(const Mat4& a, const Mat4& b);

/// exp(g*t) by scaling-and-squaring with a truncated Taylor series
/// (terms below 1e-16 dropped; squaring count from ceil(log2 |g*t|)).
Mat4 matrix_exp_real(const Mat4& g, double t);

}  // namespace qchan
