#pragma once

#include <array>
#include <optional>

#include "qht/channels.hpp"
#include "qht/hypergraph.hpp"
#include "qht/state.hpp"

namespace qht {

/// Outcomes with probability at or below this threshold contribute nothing
/// and carry no conditional state (the post-measurement normalization is
/// undefined at zero probability).
inline constexpr double kOutcomeThreshold = 1e-14;

/// The four measurement states on Alice's (a,0,1) register:
///   psi1 = (|000> + |111> + |222>)/sqrt3, psi2 the omega-phased partner,
///   psi3 = (|012> + |120> + |201>)/sqrt3, psi4 the omega-phased partner.
/// They are pairwise orthonormal but deliberately not a complete basis of the
/// 27-dimensional space; no completeness is claimed anywhere downstream.
inline const std::array<PureState, 4>& measurement_states() {
  static const std::array<PureState, 4> states = [] {
    const double inv = 1.0 / std::sqrt(3.0);
    auto build = [&](int i0, int i1, int i2, bool phased) {
      std::vector<cplx> amps(27, cplx(0.0, 0.0));
      amps[static_cast<std::size_t>(i0)] = inv;
      amps[static_cast<std::size_t>(i1)] = phased ? omega(1) * inv : cplx(inv, 0.0);
      amps[static_cast<std::size_t>(i2)] = phased ? omega(2) * inv : cplx(inv, 0.0);
      return PureState({"a", "0", "1"}, std::move(amps));
    };
    // basis indices: |000> = 0, |111> = 13, |222> = 26, |012> = 5, |120> = 15, |201> = 19
    return std::array<PureState, 4>{
        build(0, 13, 26, false),
        build(0, 13, 26, true),
        build(5, 15, 19, false),
        build(5, 15, 19, true),
    };
  }();
  return states;
}

/// Rank-1 projectors M_l = |psi_l><psi_l|.
inline const std::array<Matrix, 4>& measurement_basis() {
  static const std::array<Matrix, 4> ms = {
      measurement_states()[0].projector(), measurement_states()[1].projector(),
      measurement_states()[2].projector(), measurement_states()[3].projector()};
  return ms;
}

/// Bob's per-outcome corrections, transcribed exactly as published (real
/// signed permutations; the -1 entries are kept verbatim).
inline const std::array<Matrix, 4>& correction_set() {
  static const std::array<Matrix, 4> lambdas = [] {
    Matrix l1 = Matrix::identity(3);
    Matrix l2 = Matrix::identity(3);
    l2(1, 1) = -1.0;
    Matrix l3(3, 3);
    l3(0, 1) = 1.0;
    l3(1, 0) = 1.0;
    l3(2, 2) = 1.0;
    Matrix l4(3, 3);
    l4(0, 1) = -1.0;
    l4(1, 0) = 1.0;
    l4(2, 2) = 1.0;
    return std::array<Matrix, 4>{l1, l2, l3, l4};
  }();
  return lambdas;
}

struct TeleportOutcome {
  std::array<double, 4> probabilities{};            // P_l = tr[(M_l (x) I3) rho]
  std::array<double, 4> conditional_fidelities{};   // F_l = <phi| rho~_Bl |phi>
  std::array<std::optional<DensityMatrix>, 4> conditional_states{};  // rho~_Bl when P_l > threshold
  double aggregate = 0.0;                           // F = sum_l P_l F_l
};

/// Run the protocol end to end:
///   1. rho_hat   = |H_i><H_i| on registers (0,1,2)
///   2. rho_noisy = lifted channel applied to rho_hat
///   3. rho_full  = rho_in (x) rho_noisy on (a,0,1,2)
///   4. measure (a,0,1) with the four projectors; trace out Alice
///   5. correct with Lambda_l; F_l = <phi|rho~|phi>; F = sum P_l F_l
/// The four outcomes span only part of the measurement space, so sum P_l < 1
/// in general; the aggregate is deliberately not renormalized.
inline TeleportOutcome teleport(const StateParams& params, int hypergraph_index,
                                const ChannelSpec& channel) {
  const PureState phi = input_state(params);
  const DensityMatrix rho_in = DensityMatrix::from_pure(phi);

  const PureState h = hypergraph_state(canonical_hypergraph(hypergraph_index));
  const DensityMatrix rho_hat = DensityMatrix::from_pure(h);
  const DensityMatrix rho_noisy = apply_channel(rho_hat, lifted_channel(channel));
  const DensityMatrix rho_full = tensor(rho_in, rho_noisy);

  const Matrix id3 = Matrix::identity(3);
  TeleportOutcome out;
  for (std::size_t l = 0; l < 4; ++l) {
    const Matrix embedded = kron(measurement_basis()[l], id3);  // Alice holds the first three registers
    const Matrix post = embedded * rho_full.matrix() * dagger(embedded);
    const double prob = trace(embedded * rho_full.matrix()).real();
    out.probabilities[l] = prob;
    if (prob <= kOutcomeThreshold) continue;

    const DensityMatrix reduced = partial_trace(
        DensityMatrix(rho_full.labels(), post, /*normalized=*/false), {"a", "0", "1"});
    Matrix bob = reduced.matrix() * cplx(1.0 / prob, 0.0);
    const Matrix& corr = correction_set()[l];
    DensityMatrix corrected(reduced.labels(), corr * bob * dagger(corr));
    const double fl = overlap_pure_mixed(phi, corrected);
    out.conditional_fidelities[l] = fl;
    out.conditional_states[l] = std::move(corrected);
    out.aggregate += prob * fl;
  }
  return out;
}

}  // namespace qht
