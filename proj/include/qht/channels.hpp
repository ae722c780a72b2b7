#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qht/hypergraph.hpp"
#include "qht/state.hpp"

namespace qht {

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

//=============================================================================
// Weyl operators
//=============================================================================

struct WeylIndex {
  int r;
  int s;

  WeylIndex(int r_, int s_) : r(r_), s(s_) {
    if (r < 0 || r > 2 || s < 0 || s > 2)
      throw ParameterError("Weyl indices must lie in {0,1,2}");
  }
};

/// W_{r,s} = sum_i omega^{i r} |i><i (+) s|, (+) = addition mod 3.
inline Matrix weyl(const WeylIndex& idx) {
  Matrix w(3, 3);
  for (int i = 0; i < 3; ++i)
    w(static_cast<std::size_t>(i), static_cast<std::size_t>((i + idx.s) % 3)) = omega(i * idx.r);
  return w;
}

//=============================================================================
// Non-Markovian parameter maps
//=============================================================================

/// lambda(t) = 1 - e^{-g t} ((g/l) sinh(l t/2) + cosh(l t/2))^2 with
/// l = sqrt(g^2 - 2 gamma g). Evaluated in complex arithmetic throughout so
/// the oscillatory regime g^2 < 2 gamma g needs no separate branch; the
/// imaginary residue (<= 1e-12) is discarded.
inline double lambda_t(double t, double g, double gamma) {
  if (t < 0 || g < 0 || gamma < 0)
    throw ParameterError("lambda(t) requires t, g, gamma >= 0");
  const cplx l = std::sqrt(cplx(g * g - 2.0 * gamma * g, 0.0));
  cplx bracket;
  if (std::abs(l) < 1e-30) {
    bracket = cplx(g * t / 2.0 + 1.0, 0.0);  // l -> 0 limit: (g/l) sinh(l t/2) -> g t / 2
  } else {
    bracket = (cplx(g, 0.0) / l) * std::sinh(l * t / 2.0) + std::cosh(l * t / 2.0);
  }
  const cplx value = 1.0 - std::exp(cplx(-g * t, 0.0)) * bracket * bracket;
  if (std::abs(value.imag()) > 1e-12)
    throw NumericalError("lambda(t) evaluation left an imaginary residue");
  const double v = value.real();
  if (v < -1e-9 || v > 1.0 + 1e-9)
    throw ParameterError("lambda(t) = " + std::to_string(v) + " falls outside [0,1]");
  return std::min(std::max(v, 0.0), 1.0);
}

/// Bare kappa(p) = p (1 + eta (1-2p) sin(beta p)) / (1 + eta (1-2p)), with no
/// range restriction on the result (used e.g. for monotonicity scans).
inline double kappa_p_raw(double p, double eta, double beta) {
  if (p < 0 || p > 1) throw ParameterError("kappa(p) requires p in [0,1]");
  if (eta < 0 || beta < 0) throw ParameterError("kappa(p) requires eta, beta >= 0");
  const double denom = 1.0 + eta * (1.0 - 2.0 * p);
  if (std::abs(denom) <= 1e-12)
    throw ParameterError("kappa(p) denominator vanishes at p = " + std::to_string(p));
  return p * (1.0 + eta * (1.0 - 2.0 * p) * std::sin(beta * p)) / denom;
}

/// kappa(p) as a Kraus mixing weight: must land in [0,1].
inline double kappa_p(double p, double eta, double beta) {
  const double v = kappa_p_raw(p, eta, beta);
  if (v < -1e-12 || v > 1.0 + 1e-12)
    throw ParameterError("kappa(" + std::to_string(p) + ") = " + std::to_string(v) +
                         " falls outside [0,1]; not a valid mixing weight");
  return std::min(std::max(v, 0.0), 1.0);
}

//=============================================================================
// Channel specification
//=============================================================================

enum class ChannelKind {
  QutritFlip,
  QutritPhaseFlip,
  Depolarizing,
  AmplitudeDampingMarkov,
  AmplitudeDampingNonMarkov,
  DephasingMarkov,
  DephasingNonMarkov,
  DepolarizationNonMarkov,
};

inline const std::vector<std::pair<ChannelKind, std::string>>& channel_names() {
  static const std::vector<std::pair<ChannelKind, std::string>> names = {
      {ChannelKind::QutritFlip, "qutrit-flip"},
      {ChannelKind::QutritPhaseFlip, "qutrit-phase-flip"},
      {ChannelKind::Depolarizing, "depolarizing"},
      {ChannelKind::AmplitudeDampingMarkov, "ad-markov"},
      {ChannelKind::AmplitudeDampingNonMarkov, "ad-nonmarkov"},
      {ChannelKind::DephasingMarkov, "dephasing-markov"},
      {ChannelKind::DephasingNonMarkov, "dephasing-nonmarkov"},
      {ChannelKind::DepolarizationNonMarkov, "depolarization-nonmarkov"},
  };
  return names;
}

inline std::string to_string(ChannelKind kind) {
  for (const auto& [k, n] : channel_names())
    if (k == kind) return n;
  throw ParameterError("unknown channel kind");
}

inline ChannelKind channel_kind_from_name(const std::string& name) {
  for (const auto& [k, n] : channel_names())
    if (n == name) return k;
  throw ParameterError("unknown channel name '" + name + "'");
}

/// Defaults for the non-Markovian constants follow the reference parameter
/// choices g=1, gamma=10, eta=0.5, beta=100.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::QutritFlip;
  double p = 0.0;       // mixing probability, all Markovian kinds + non-Markovian dephasing/depolarization
  double t = 0.0;       // time, non-Markovian amplitude damping
  double g = 1.0;       // spectral width of the system-environment coupling
  double gamma = 10.0;  // spontaneous emission rate
  double eta = 0.5;     // non-Markovian dephasing strength
  double beta = 100.0;  // non-Markovian dephasing frequency

  static ChannelSpec markov(ChannelKind kind, double p) {
    ChannelSpec s;
    s.kind = kind;
    s.p = p;
    s.mixing_weight();  // construction-time parameter validation
    return s;
  }

  static ChannelSpec ad_non_markov(double t, double g = 1.0, double gamma = 10.0) {
    ChannelSpec s;
    s.kind = ChannelKind::AmplitudeDampingNonMarkov;
    s.t = t;
    s.g = g;
    s.gamma = gamma;
    s.mixing_weight();
    return s;
  }

  static ChannelSpec dephasing_non_markov(double p, double eta = 0.5, double beta = 100.0) {
    ChannelSpec s;
    s.kind = ChannelKind::DephasingNonMarkov;
    s.p = p;
    s.eta = eta;
    s.beta = beta;
    s.mixing_weight();
    return s;
  }

  bool uses_time() const { return kind == ChannelKind::AmplitudeDampingNonMarkov; }

  /// The weight actually entering the Kraus family: p for the Markovian
  /// kinds and the non-Markovian depolarization, lambda(t) or kappa(p) for
  /// the non-Markovian damping/dephasing kinds. Throws ParameterError when
  /// the derived weight leaves [0,1].
  double mixing_weight() const {
    switch (kind) {
      case ChannelKind::AmplitudeDampingNonMarkov:
        return lambda_t(t, g, gamma);
      case ChannelKind::DephasingNonMarkov:
        return kappa_p(p, eta, beta);
      default:
        if (p < 0.0 || p > 1.0)
          throw ParameterError("channel probability p = " + std::to_string(p) +
                               " outside [0,1]");
        return p;
    }
  }
};

//=============================================================================
// Kraus sets
//=============================================================================

/// Ordered Kraus family over a fixed dimension. `completeness_defect` is
/// ||sum K^dag K - target||_max; single-qutrit site families here sum to
/// I3/3 (so that the three-site lift is exactly trace preserving), lifted
/// families sum to I27.
class KrausSet {
public:
  KrausSet(std::size_t dim, std::vector<Matrix> operators)
      : dim_(dim), operators_(std::move(operators)) {
    for (const Matrix& k : operators_)
      if (k.rows() != dim_ || k.cols() != dim_)
        throw ShapeError("Kraus operator has wrong dimension");
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return operators_.size(); }
  const std::vector<Matrix>& operators() const { return operators_; }
  const Matrix& operator[](std::size_t i) const { return operators_[i]; }

  double completeness_defect(double target_scale) const {
    Matrix sum(dim_, dim_);
    for (const Matrix& k : operators_) sum += dagger(k) * k;
    return max_abs_diff(sum, Matrix::identity(dim_) * cplx(target_scale, 0.0));
  }

private:
  std::size_t dim_;
  std::vector<Matrix> operators_;
};

namespace detail {

inline void append_weyl_family(std::vector<Matrix>& ops, double identity_weight,
                               double weyl_weight, bool phase_only, bool shift_only) {
  ops.push_back(Matrix::identity(3) * cplx(std::sqrt(identity_weight), 0.0));
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) {
      if (r == 0 && s == 0) continue;
      if (phase_only && s != 0) continue;
      if (shift_only && r != 0) continue;
      ops.push_back(weyl({r, s}) * cplx(std::sqrt(weyl_weight), 0.0));
    }
}

}  // namespace detail

/// Single-qutrit Kraus family for one noise site, normalized so that
/// sum K^dag K = I3/3 exactly. Sizes: flip/phase-flip 3, amplitude damping 3,
/// depolarizing/dephasing/non-Markovian variants 9.
inline KrausSet single_qutrit_kraus(const ChannelSpec& spec) {
  const double w = spec.mixing_weight();
  std::vector<Matrix> ops;
  switch (spec.kind) {
    case ChannelKind::QutritFlip:
      detail::append_weyl_family(ops, (1.0 - w) / 3.0, w / 6.0, false, true);
      break;
    case ChannelKind::QutritPhaseFlip:
      detail::append_weyl_family(ops, (1.0 - w) / 3.0, w / 6.0, true, false);
      break;
    case ChannelKind::Depolarizing:
      detail::append_weyl_family(ops, (9.0 - 8.0 * w) / 27.0, w / 27.0, false, false);
      break;
    case ChannelKind::DephasingMarkov:
    case ChannelKind::DephasingNonMarkov:
      detail::append_weyl_family(ops, (1.0 - w) / 3.0, w / 24.0, false, false);
      break;
    case ChannelKind::DepolarizationNonMarkov: {
      const double q = w * (1.0 - w);
      detail::append_weyl_family(ops, (9.0 - 8.0 * q) / 27.0, q / 27.0, false, false);
      break;
    }
    case ChannelKind::AmplitudeDampingMarkov:
    case ChannelKind::AmplitudeDampingNonMarkov: {
      // K00 = |0><0| + sqrt(1-w)(|1><1| + |2><2|), K0i = sqrt(w)|0><i|; this
      // family alone sums to I3, so each operator carries the sqrt(1/3) site
      // weight explicitly.
      const double site = std::sqrt(1.0 / 3.0);
      Matrix k0(3, 3);
      k0(0, 0) = 1.0;
      k0(1, 1) = std::sqrt(1.0 - w);
      k0(2, 2) = std::sqrt(1.0 - w);
      Matrix k1(3, 3), k2(3, 3);
      k1(0, 1) = std::sqrt(w);
      k2(0, 2) = std::sqrt(w);
      ops.push_back(k0 * cplx(site, 0.0));
      ops.push_back(k1 * cplx(site, 0.0));
      ops.push_back(k2 * cplx(site, 0.0));
      break;
    }
  }
  return KrausSet(3, std::move(ops));
}

/// Lift a single-site family (summing to I3/3) to the three-qutrit channel:
/// each base operator is placed at each of the three sites with identities
/// elsewhere. The 3*|base| results sum to I27.
inline KrausSet lift_three_qutrit(const KrausSet& base) {
  if (base.dim() != 3) throw ShapeError("lift expects single-qutrit operators");
  if (base.completeness_defect(1.0 / 3.0) > 1e-12)
    throw ParameterError("lift precondition violated: base family must sum to I3/3");
  const Matrix id3 = Matrix::identity(3);
  std::vector<Matrix> ops;
  ops.reserve(3 * base.size());
  for (int site = 0; site < 3; ++site)
    for (const Matrix& k : base.operators()) {
      const Matrix& m0 = site == 0 ? k : id3;
      const Matrix& m1 = site == 1 ? k : id3;
      const Matrix& m2 = site == 2 ? k : id3;
      ops.push_back(kron(kron(m0, m1), m2));
    }
  return KrausSet(27, std::move(ops));
}

inline KrausSet lifted_channel(const ChannelSpec& spec) {
  return lift_three_qutrit(single_qutrit_kraus(spec));
}

/// rho' = sum_j K_j rho K_j^dag.
inline DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& kraus) {
  if (rho.dim() != kraus.dim())
    throw ShapeError("channel dimension " + std::to_string(kraus.dim()) +
                     " does not match state dimension " + std::to_string(rho.dim()));
  Matrix out(rho.dim(), rho.dim());
  for (const Matrix& k : kraus.operators()) out += k * rho.matrix() * dagger(k);
  return DensityMatrix(rho.labels(), std::move(out), rho.normalized());
}

}  // namespace qht
