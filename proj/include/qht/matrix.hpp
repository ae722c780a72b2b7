#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qht {

using cplx = std::complex<double>;

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Kron products past this dimension are refused (largest protocol object is 81x81).
inline constexpr std::size_t kMaxKronDim = 6561;  // 3^8

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense row-major complex matrix. Small fixed sizes only (3..81), so no
/// blocking or sparsity; everything is value-semantic and immutable in use.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {
    if (rows == 0 || cols == 0)
      throw ShapeError("matrix dimensions must be positive");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<cplx>& data() const { return data_; }

  bool all_finite() const {
    for (const cplx& z : data_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  Matrix& operator*=(cplx s) {
    for (cplx& z : data_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("matrix product shape mismatch: " + a.shape_str() + " * " + b.shape_str());
    Matrix out(a.rows_, b.cols_);
    // ikj order keeps the inner loop contiguous in both b and out
    for (std::size_t i = 0; i < a.rows_; ++i) {
      cplx* orow = &out.data_[i * out.cols_];
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cplx aik = a.data_[i * a.cols_ + k];
        if (aik == cplx(0.0, 0.0)) continue;
        const cplx* brow = &b.data_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) orow[j] += aik * brow[j];
      }
    }
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError("shape mismatch: " + shape_str() + " vs " + o.shape_str());
  }

  std::size_t rows_, cols_;
  std::vector<cplx> data_;
};

inline Matrix kron(const Matrix& a, const Matrix& b, std::size_t max_dim = kMaxKronDim) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim)
    throw DimensionError("kron result " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " exceeds the dimension limit " + std::to_string(max_dim));
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

inline Matrix dagger(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline cplx trace(const Matrix& a) {
  if (!a.square()) throw ShapeError("trace requires a square matrix, got " + a.shape_str());
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("shape mismatch: " + a.shape_str() + " vs " + b.shape_str());
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline double hermiticity_defect(const Matrix& a) {
  if (!a.square()) throw ShapeError("hermiticity check requires a square matrix");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

/// Smallest eigenvalue of a Hermitian matrix via cyclic Jacobi on the real
/// symmetric embedding [[A, -B], [B, A]] of H = A + iB. Spectrum of the
/// embedding is the spectrum of H with doubled multiplicity.
inline double min_eigenvalue_hermitian(const Matrix& h) {
  if (!h.square()) throw ShapeError("eigenvalues require a square matrix");
  const std::size_t n = h.rows();
  const std::size_t m = 2 * n;
  std::vector<double> a(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = h(i, j).real(), im = h(i, j).imag();
      a[i * m + j] = re;
      a[(i + n) * m + (j + n)] = re;
      a[i * m + (j + n)] = -im;
      a[(i + n) * m + j] = im;
    }

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) s += a[i * m + j] * a[i * m + j];
    return std::sqrt(2.0 * s);
  };

  const double tol = 1e-14 * std::max(1.0, h.max_abs()) * static_cast<double>(m);
  for (int sweep = 0; sweep < 64 && off_norm() > tol; ++sweep) {
    for (std::size_t p = 0; p < m - 1; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = a[p * m + q];
        if (std::abs(apq) < 1e-300) continue;
        const double app = a[p * m + p], aqq = a[q * m + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = a[k * m + p], akq = a[k * m + q];
          a[k * m + p] = c * akp - s * akq;
          a[k * m + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = a[p * m + k], aqk = a[q * m + k];
          a[p * m + k] = c * apk - s * aqk;
          a[q * m + k] = s * apk + c * aqk;
        }
      }
  }

  double mn = a[0];
  for (std::size_t i = 1; i < m; ++i) mn = std::min(mn, a[i * m + i]);
  return mn;
}

}  // namespace qht
