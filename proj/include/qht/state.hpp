#pragma once

#include <set>
#include <string>
#include <vector>

#include "qht/matrix.hpp"

namespace qht {

struct LabelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::size_t pow3(std::size_t n) {
  std::size_t d = 1;
  for (std::size_t i = 0; i < n; ++i) d *= 3;
  return d;
}

inline void require_labels(const std::vector<std::string>& labels, std::size_t num_qutrits) {
  if (labels.size() != num_qutrits)
    throw LabelError("expected " + std::to_string(num_qutrits) + " register labels, got " +
                     std::to_string(labels.size()));
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw LabelError("register labels must be unique");
}

}  // namespace detail

/// Pure state over a labeled register of qutrits. Basis index of
/// |q_0 q_1 ... q_{n-1}> is sum_k q_k * 3^(n-1-k); the first label is the
/// most significant digit.
class PureState {
public:
  PureState(std::vector<std::string> labels, std::vector<cplx> amplitudes)
      : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
    detail::require_labels(labels_, labels_.size());
    if (amplitudes_.size() != detail::pow3(labels_.size()))
      throw ShapeError("amplitude vector length must be 3^n");
    double norm2 = 0.0;
    for (const cplx& z : amplitudes_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw NumericalError("non-finite amplitude");
      norm2 += std::norm(z);
    }
    if (std::abs(norm2 - 1.0) > 1e-12)
      throw NumericalError("state is not normalized: |psi|^2 = " + std::to_string(norm2));
  }

  std::size_t num_qutrits() const { return labels_.size(); }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }
  const cplx& amplitude(std::size_t i) const { return amplitudes_[i]; }

  /// |psi><psi| over the same register.
  Matrix projector() const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (amplitudes_[i] == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        m(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    }
    return m;
  }

private:
  std::vector<std::string> labels_;
  std::vector<cplx> amplitudes_;
};

/// Density matrix over a labeled register. Hermiticity is enforced at
/// construction; unit trace only when `normalized` (intermediate
/// post-measurement products are carried unnormalized).
class DensityMatrix {
public:
  DensityMatrix(std::vector<std::string> labels, Matrix matrix, bool normalized = true)
      : labels_(std::move(labels)), matrix_(std::move(matrix)), normalized_(normalized) {
    detail::require_labels(labels_, labels_.size());
    const std::size_t d = detail::pow3(labels_.size());
    if (matrix_.rows() != d || matrix_.cols() != d)
      throw ShapeError("density matrix must be 3^n x 3^n over the register");
    if (!matrix_.all_finite()) throw NumericalError("non-finite density matrix entry");
    if (hermiticity_defect(matrix_) > 1e-12)
      throw NumericalError("density matrix is not Hermitian within 1e-12");
    if (normalized_ && std::abs(trace(matrix_).real() - 1.0) > 1e-10)
      throw NumericalError("density matrix trace deviates from 1 beyond 1e-10");
  }

  static DensityMatrix from_pure(const PureState& psi) {
    return DensityMatrix(psi.labels(), psi.projector());
  }

  std::size_t num_qutrits() const { return labels_.size(); }
  std::size_t dim() const { return matrix_.rows(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& matrix() const { return matrix_; }
  bool normalized() const { return normalized_; }

  double min_eigenvalue() const { return min_eigenvalue_hermitian(matrix_); }

  /// Validation-mode check: positive semidefinite within -1e-10.
  bool is_psd(double tol = 1e-10) const { return min_eigenvalue() >= -tol; }

private:
  std::vector<std::string> labels_;
  Matrix matrix_;
  bool normalized_;
};

/// rho_A (x) rho_B with concatenated register labels.
inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return DensityMatrix(std::move(labels), kron(a.matrix(), b.matrix()),
                       a.normalized() && b.normalized());
}

/// Trace out the registers named in `discard`. Empty `discard` returns the
/// input unchanged.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::set<std::string>& discard) {
  for (const std::string& lbl : discard) {
    bool found = false;
    for (const std::string& l : rho.labels()) found = found || (l == lbl);
    if (!found) throw LabelError("unknown register label '" + lbl + "'");
  }
  if (discard.empty()) return rho;

  const std::size_t n = rho.num_qutrits();
  std::vector<std::size_t> keep_pos, drop_pos;
  std::vector<std::string> keep_labels;
  for (std::size_t k = 0; k < n; ++k) {
    if (discard.count(rho.labels()[k])) {
      drop_pos.push_back(k);
    } else {
      keep_pos.push_back(k);
      keep_labels.push_back(rho.labels()[k]);
    }
  }

  // stride of register k in the basis index (first label most significant)
  std::vector<std::size_t> stride(n);
  for (std::size_t k = 0; k < n; ++k) stride[k] = detail::pow3(n - 1 - k);

  const std::size_t dk = detail::pow3(keep_pos.size());
  const std::size_t dt = detail::pow3(drop_pos.size());
  Matrix out(std::max<std::size_t>(dk, 1), std::max<std::size_t>(dk, 1));

  auto expand = [&](std::size_t packed, const std::vector<std::size_t>& pos) {
    std::size_t idx = 0;
    for (std::size_t k = pos.size(); k-- > 0;) {
      idx += (packed % 3) * stride[pos[k]];
      packed /= 3;
    }
    return idx;
  };

  for (std::size_t i = 0; i < dk; ++i) {
    const std::size_t bi = expand(i, keep_pos);
    for (std::size_t j = 0; j < dk; ++j) {
      const std::size_t bj = expand(j, keep_pos);
      cplx sum = 0.0;
      for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t bt = expand(t, drop_pos);
        sum += rho.matrix()(bi + bt, bj + bt);
      }
      out(i, j) = sum;
    }
  }

  // discarding every register leaves a 0-register 1x1 matrix holding the trace
  return DensityMatrix(std::move(keep_labels), std::move(out), rho.normalized());
}

/// <phi|rho|phi>, the raw overlap used as the per-outcome protocol fidelity.
inline double overlap_pure_mixed(const PureState& phi, const DensityMatrix& rho) {
  if (phi.dim() != rho.dim())
    throw ShapeError("state/density dimension mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < phi.dim(); ++i) {
    if (phi.amplitude(i) == cplx(0.0, 0.0)) continue;
    for (std::size_t j = 0; j < phi.dim(); ++j)
      acc += std::conj(phi.amplitude(i)) * rho.matrix()(i, j) * phi.amplitude(j);
  }
  const double v = acc.real();
  if (v < -1e-10)
    throw NumericalError("negative overlap <phi|rho|phi> = " + std::to_string(v) +
                         " signals a PSD violation");
  return v;
}

/// sqrt(<phi|rho|phi>), clamped into [0,1] when within 1e-10 of the interval.
inline double fidelity_pure_mixed(const PureState& phi, const DensityMatrix& rho) {
  double v = overlap_pure_mixed(phi, rho);
  v = std::max(v, 0.0);
  double f = std::sqrt(v);
  if (f > 1.0 && f <= 1.0 + 1e-10) f = 1.0;
  return f;
}

}  // namespace qht
