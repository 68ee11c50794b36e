#include "trios/decompose.hpp"

#include <string>

namespace trios {

Circuit pass1_decompose(const Circuit& in) {
  Circuit out(in.n_qubits());
  out.set_n_clbits(in.n_clbits());
  for (const Gate& g : in.gates()) {
    switch (g.kind) {
      case GateKind::CU1: {
        const int c = g.qubits[0], t = g.qubits[1];
        const double half = g.params[0] / 2.0;
        out.u1(c, half);
        out.cx(c, t);
        out.u1(t, -half);
        out.cx(c, t);
        out.u1(t, half);
        break;
      }
      case GateKind::SWAP:
        out.cx(g.qubits[0], g.qubits[1]);
        out.cx(g.qubits[1], g.qubits[0]);
        out.cx(g.qubits[0], g.qubits[1]);
        break;
      default:
        out.append(g.kind, g.qubits, g.params, g.cbit);
        break;
    }
  }
  return out;
}

void append_toffoli_6cnot(Circuit& c, int control1, int control2, int target) {
  const int a = control1, b = control2, t = target;
  c.h(t);
  c.cx(b, t);
  c.tdg(t);
  c.cx(a, t);
  c.t(t);
  c.cx(b, t);
  c.tdg(t);
  c.cx(a, t);
  c.t(b);
  c.t(t);
  c.cx(a, b);
  c.t(a);
  c.tdg(b);
  c.h(t);
  c.cx(a, b);
}

void append_toffoli_8cnot(Circuit& c, int top, int mid, int bot,
                          int target_pos) {
  if (target_pos != top && target_pos != mid && target_pos != bot) {
    throw PlacementError("8-CX Toffoli: target must be one of the three line positions");
  }
  c.h(target_pos);
  c.t(top);
  c.t(mid);
  c.t(bot);
  c.cx(top, mid);
  c.cx(mid, bot);
  c.cx(top, mid);
  c.t(bot);
  c.cx(mid, bot);
  c.cx(top, mid);
  c.tdg(mid);
  c.tdg(bot);
  c.cx(mid, bot);
  c.cx(top, mid);
  c.tdg(bot);
  c.cx(mid, bot);
  c.h(target_pos);
}

TrioPlacement classify_trio(const CouplingGraph& g, int a, int b, int c) {
  const bool ab = g.has_edge(a, b);
  const bool ac = g.has_edge(a, c);
  const bool bc = g.has_edge(b, c);
  if (ab && ac && bc) return {TrioShape::Triangle, -1};
  if (ab && ac) return {TrioShape::Line, a};
  if (ab && bc) return {TrioShape::Line, b};
  if (ac && bc) return {TrioShape::Line, c};
  throw PlacementError("Toffoli operands " + std::to_string(a) + "," +
                       std::to_string(b) + "," + std::to_string(c) +
                       " are neither a coupled line nor a triangle");
}

namespace {

// Picks the middle for an 8-CX lowering: the member coupled to both
// others, smallest index first on a triangle.
int line_middle(const CouplingGraph& g, int a, int b, int c) {
  int best = -1;
  for (int m : {a, b, c}) {
    int o1 = (m == a) ? b : a;
    int o2 = (m == c) ? b : c;
    if (g.has_edge(m, o1) && g.has_edge(m, o2)) {
      if (best < 0 || m < best) best = m;
    }
  }
  if (best < 0) {
    throw PlacementError("no Toffoli operand is coupled to both others");
  }
  return best;
}

void lower_ccx(Circuit& out, const CouplingGraph& g, const Gate& gate,
               ToffoliPolicy policy) {
  const int c1 = gate.qubits[0], c2 = gate.qubits[1], t = gate.qubits[2];
  const TrioPlacement placement = classify_trio(g, c1, c2, t);
  bool use6;
  switch (policy) {
    case ToffoliPolicy::Force6:
      use6 = true;
      break;
    case ToffoliPolicy::Force8:
      use6 = false;
      break;
    default:
      use6 = placement.shape == TrioShape::Triangle;
      break;
  }
  if (use6) {
    append_toffoli_6cnot(out, c1, c2, t);
    return;
  }
  const int mid = placement.shape == TrioShape::Line ? placement.middle
                                                     : line_middle(g, c1, c2, t);
  const int end1 = (mid == c1) ? c2 : c1;
  const int end2 = (mid == t) ? c2 : t;
  append_toffoli_8cnot(out, end1, mid, end2, t);
}

}  // namespace

Circuit pass2_decompose(const Circuit& in, const CouplingGraph& g,
                        ToffoliPolicy policy) {
  if (in.n_qubits() > g.n_qubits()) {
    throw PlacementError("circuit is wider than the device");
  }
  Circuit out(in.n_qubits());
  out.set_n_clbits(in.n_clbits());
  for (const Gate& gate : in.gates()) {
    switch (gate.kind) {
      case GateKind::CU1:
        throw PlacementError("CU1 reached the final lowering pass; run pass 1 first");
      case GateKind::CX:
        if (!g.has_edge(gate.qubits[0], gate.qubits[1])) {
          throw PlacementError("CX on uncoupled qubits " +
                               std::to_string(gate.qubits[0]) + "," +
                               std::to_string(gate.qubits[1]));
        }
        out.append(gate.kind, gate.qubits, gate.params, gate.cbit);
        break;
      case GateKind::SWAP:
        if (!g.has_edge(gate.qubits[0], gate.qubits[1])) {
          throw PlacementError("SWAP on uncoupled qubits " +
                               std::to_string(gate.qubits[0]) + "," +
                               std::to_string(gate.qubits[1]));
        }
        out.cx(gate.qubits[0], gate.qubits[1]);
        out.cx(gate.qubits[1], gate.qubits[0]);
        out.cx(gate.qubits[0], gate.qubits[1]);
        break;
      case GateKind::CCX:
        lower_ccx(out, g, gate, policy);
        break;
      default:
        out.append(gate.kind, gate.qubits, gate.params, gate.cbit);
        break;
    }
  }
  return out;
}

}  // namespace trios
