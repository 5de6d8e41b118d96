#include "qchan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qchan {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), e_(dim * dim) {
  if (dim < 1) throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix add: dimension mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix sub: dimension mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complexd s) {
  for (auto& x : e_) x *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(complexd s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return multiply(a, b);
}

const ComplexMatrix& pauli(int k) {
  static const std::array<ComplexMatrix, 3> sigma = [] {
    std::array<ComplexMatrix, 3> s{ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2)};
    s[0](0, 1) = 1.0;
    s[0](1, 0) = 1.0;
    s[1](0, 1) = complexd(0, -1);
    s[1](1, 0) = complexd(0, 1);
    s[2](0, 0) = 1.0;
    s[2](1, 1) = -1.0;
    return s;
  }();
  if (k < 1 || k > 3) throw std::invalid_argument("pauli: k must be 1, 2 or 3");
  return sigma[k - 1];
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
  const int n = a.dim();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const complexd aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int da = a.dim(), db = b.dim();
  ComplexMatrix r(da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l)
          r(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return r;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m) {
  if (m.dim() != 4) throw std::invalid_argument("partial_transpose: dim must be 4");
  ComplexMatrix r(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r(i * 2 + k, j * 2 + l) = m(i * 2 + l, j * 2 + k);
  return r;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m) {
  if (m.dim() != 4) throw std::invalid_argument("partial_trace_second: dim must be 4");
  ComplexMatrix r(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r(i, j) += m(i * 2 + k, j * 2 + k);
  return r;
}

complexd trace(const ComplexMatrix& m) {
  complexd t = 0.0;
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

double max_abs(const ComplexMatrix& m) {
  double r = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double r = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
  return r;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int p = 0; p < a.dim(); ++p)
    for (int q = p + 1; q < a.dim(); ++q) s += 2.0 * std::norm(a(p, q));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The pivot phase is absorbed
// first so the remaining 2x2 problem is real symmetric.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const complexd apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const complexd phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double zeta = (app - aqq) / (2.0 * mag);
  const double t = (zeta >= 0.0 ? -1.0 : 1.0) /
                   (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.dim();
  ComplexMatrix u = ComplexMatrix::identity(n);
  u(p, p) = c;
  u(p, q) = s;
  u(q, p) = -s * std::conj(phase);
  u(q, q) = c * std::conj(phase);

  a = adjoint(u) * a * u;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  v = v * u;
}

}  // namespace

HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m, bool want_vectors) {
  const int n = m.dim();
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian within 1e-10");

  // Symmetrize to absorb round-off below the tolerance.
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  constexpr double kOffTol = 1e-13;
  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kOffTol) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) >= kOffTol)
    throw std::runtime_error("hermitian_eigenvalues: Jacobi sweeps did not converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  HermitianSpectrum spec;
  spec.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) spec.eigenvalues[i] = a(order[i], order[i]).real();
  if (want_vectors) {
    ComplexMatrix w(n);
    for (int col = 0; col < n; ++col)
      for (int row = 0; row < n; ++row) w(row, col) = v(row, order[col]);
    spec.eigenvectors = std::move(w);
  }
  return spec;
}

double trace_norm(const ComplexMatrix& m) {
  const auto spec = hermitian_eigenvalues(m);
  double s = 0.0;
  for (double x : spec.eigenvalues) s += std::abs(x);
  return s;
}

double Vec3::norm() const {
  return std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
}

Vec3 operator+(const Vec3& a, const Vec3& b) {
  return Vec3{{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
}
Vec3 operator-(const Vec3& a, const Vec3& b) {
  return Vec3{{a[0] - b[0], a[1] - b[1], a[2] - b[2]}};
}
Vec3 operator*(double s, const Vec3& v) {
  return Vec3{{s * v[0], s * v[1], s * v[2]}};
}

Mat3 Mat3::identity() {
  Mat3 m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
  return r;
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double r = 0.0;
  for (int i = 0; i < 9; ++i) r = std::max(r, std::abs(a.e[i] - b.e[i]));
  return r;
}

Mat4 Mat4::identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double r = 0.0;
  for (int i = 0; i < 16; ++i) r = std::max(r, std::abs(a.e[i] - b.e[i]));
  return r;
}

namespace {

double inf_norm(const Mat4& m) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i) {
    double row = 0.0;
    for (int j = 0; j < 4; ++j) row += std::abs(m(i, j));
    r = std::max(r, row);
  }
  return r;
}

}  // namespace

Mat4 matrix_exp_real(const Mat4& g, double t) {
  for (double x : g.e)
    if (!std::isfinite(x)) throw std::invalid_argument("matrix_exp_real: non-finite entry");
  if (!std::isfinite(t)) throw std::invalid_argument("matrix_exp_real: non-finite time");

  Mat4 m;
  for (int i = 0; i < 16; ++i) m.e[i] = g.e[i] * t;

  const double nrm = inf_norm(m);
  int squarings = 0;
  if (nrm > 1.0) squarings = static_cast<int>(std::ceil(std::log2(nrm)));
  const double scale = std::ldexp(1.0, -squarings);
  for (double& x : m.e) x *= scale;

  Mat4 result = Mat4::identity();
  Mat4 term = Mat4::identity();
  constexpr double kTermTol = 1e-16;
  constexpr int kMaxTerms = 100;
  int k = 1;
  for (; k <= kMaxTerms; ++k) {
    term = term * m;
    const double inv = 1.0 / k;
    double largest = 0.0;
    for (double& x : term.e) {
      x *= inv;
      largest = std::max(largest, std::abs(x));
    }
    for (int i = 0; i < 16; ++i) result.e[i] += term.e[i];
    if (largest < kTermTol) break;
  }
  if (k > kMaxTerms) throw std::runtime_error("matrix_exp_real: series did not converge");

  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace qchan
