#pragma once

#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "qht/state.hpp"

namespace qht {

/// omega = exp(2*pi*i/3), the primitive cubic root of unity.
inline cplx omega(int power = 1) {
  const double arg = 2.0 * std::numbers::pi * static_cast<double>(((power % 3) + 3) % 3) / 3.0;
  return cplx(std::cos(arg), std::sin(arg));
}

/// Three-vertex hypergraph on {0,1,2}. Hyperedges are oriented vertex tuples
/// of cardinality 2 or 3: the last vertex is the gate target, the preceding
/// ones are controls. Orientation matters because the conditional controlled-Z
/// below is not invariant under control/target exchange on qutrits (see the
/// orientation tests). Loops (single-vertex edges) are rejected and duplicate
/// tuples collapse.
class Hypergraph {
public:
  explicit Hypergraph(const std::vector<std::vector<int>>& hyperedges) {
    for (const auto& e : hyperedges) {
      std::set<int> verts(e.begin(), e.end());
      for (int v : verts)
        if (v < 0 || v > 2) throw LabelError("hyperedge vertex out of range: " + std::to_string(v));
      if (verts.size() < 2)
        throw ShapeError("loops (cardinality-1 hyperedges) are not allowed");
      if (verts.size() != e.size())
        throw ShapeError("hyperedge repeats a vertex");
      edges_.insert(e);
    }
  }

  const std::set<std::vector<int>>& edges() const { return edges_; }
  static std::array<int, 3> vertices() { return {0, 1, 2}; }

private:
  std::set<std::vector<int>> edges_;
};

enum class GateKind { Z3, CZ3, CCZ3 };

struct GateSpec {
  GateKind kind;
  std::vector<int> targets;  // 1, 2, or 3 distinct vertices in {0,1,2}

  GateSpec(GateKind k, std::vector<int> t) : kind(k), targets(std::move(t)) {
    const std::size_t want = kind == GateKind::Z3 ? 1 : kind == GateKind::CZ3 ? 2 : 3;
    if (targets.size() != want)
      throw ShapeError("gate arity mismatch: expected " + std::to_string(want) + " vertices");
    std::set<int> uniq(targets.begin(), targets.end());
    if (uniq.size() != targets.size()) throw ShapeError("gate vertices must be distinct");
    for (int v : targets)
      if (v < 0 || v > 2) throw LabelError("gate vertex out of range");
  }
};

/// Diagonal 27x27 gate on the (0,1,2) register. CZ3 multiplies |q0 q1 q2> by
/// omega^{q_t} iff the control vertex holds 2; CCZ3 requires both controls at
/// 2. Controls come first in `targets`, the target is last. Exchanging the
/// control and target roles changes the gate (e.g. the |1,2> entry), so the
/// vertex order in a hyperedge is significant.
inline Matrix gate_matrix(const GateSpec& spec) {
  Matrix g(27, 27);
  for (int q0 = 0; q0 < 3; ++q0)
    for (int q1 = 0; q1 < 3; ++q1)
      for (int q2 = 0; q2 < 3; ++q2) {
        const std::array<int, 3> q = {q0, q1, q2};
        int phase = 0;
        switch (spec.kind) {
          case GateKind::Z3:
            phase = q[static_cast<std::size_t>(spec.targets[0])];
            break;
          case GateKind::CZ3:
            if (q[static_cast<std::size_t>(spec.targets[0])] == 2)
              phase = q[static_cast<std::size_t>(spec.targets[1])];
            break;
          case GateKind::CCZ3:
            if (q[static_cast<std::size_t>(spec.targets[0])] == 2 &&
                q[static_cast<std::size_t>(spec.targets[1])] == 2)
              phase = q[static_cast<std::size_t>(spec.targets[2])];
            break;
        }
        const std::size_t idx = static_cast<std::size_t>(9 * q0 + 3 * q1 + q2);
        g(idx, idx) = omega(phase);
      }
  return g;
}

/// Input-state angles. theta1/theta2 are unrestricted reals (trig-periodic).
struct StateParams {
  double theta1;
  double theta2;

  static StateParams plus() { return {std::asin(std::sqrt(2.0 / 3.0)), std::numbers::pi / 4.0}; }
  static StateParams zero_two() { return {std::numbers::pi / 4.0, std::numbers::pi / 2.0}; }
  static StateParams zero() { return {0.0, std::numbers::pi / 2.0}; }
  /// Linked single-parameter family theta1 = 3*theta2.
  static StateParams linked(double theta2) { return {3.0 * theta2, theta2}; }
};

/// cos(t1)|0> + sin(t1)cos(t2)|1> + sin(t1)sin(t2)|2> on register "a".
inline PureState input_state(const StateParams& p) {
  if (!std::isfinite(p.theta1) || !std::isfinite(p.theta2))
    throw NumericalError("state angles must be finite");
  std::vector<cplx> amps = {
      cplx(std::cos(p.theta1), 0.0),
      cplx(std::sin(p.theta1) * std::cos(p.theta2), 0.0),
      cplx(std::sin(p.theta1) * std::sin(p.theta2), 0.0),
  };
  return PureState({"a"}, std::move(amps));
}

/// Hypergraph state: every controlled-Z gate named by the edge set applied to
/// |+++> (any application order; the gates are commuting diagonals).
/// Registers "0","1","2".
inline PureState hypergraph_state(const Hypergraph& h) {
  const double a = 1.0 / (3.0 * std::sqrt(3.0));
  std::vector<cplx> amps(27, cplx(a, 0.0));
  for (const auto& edge : h.edges()) {
    const GateSpec spec(edge.size() == 2 ? GateKind::CZ3 : GateKind::CCZ3, edge);
    const Matrix g = gate_matrix(spec);
    for (std::size_t i = 0; i < 27; ++i) amps[i] *= g(i, i);
  }
  return PureState({"0", "1", "2"}, std::move(amps));
}

/// The five connected loop-free three-vertex hypergraphs, indexed 1..5.
inline const std::array<Hypergraph, 5>& canonical_hypergraphs() {
  static const std::array<Hypergraph, 5> hs = {
      Hypergraph({{0, 1, 2}}),
      Hypergraph({{0, 1}, {1, 2}}),
      Hypergraph({{0, 1}, {1, 2}, {2, 0}}),
      Hypergraph({{0, 1}, {1, 2}, {0, 1, 2}}),
      Hypergraph({{0, 1}, {1, 2}, {2, 0}, {0, 1, 2}}),
  };
  return hs;
}

inline const Hypergraph& canonical_hypergraph(int index) {
  if (index < 1 || index > 5)
    throw LabelError("hypergraph index must be 1..5, got " + std::to_string(index));
  return canonical_hypergraphs()[static_cast<std::size_t>(index - 1)];
}

/// Resolve "H1".."H5" (case-insensitive) to the canonical index.
inline int hypergraph_index_from_name(std::string name) {
  for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (name.size() == 2 && name[0] == 'H' && name[1] >= '1' && name[1] <= '5')
    return name[1] - '0';
  throw LabelError("unknown hypergraph name '" + name + "' (expected H1..H5)");
}

}  // namespace qht
