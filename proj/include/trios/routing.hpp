// Qubit placement and movement.
//
// The baseline router expects Toffolis to be decomposed up front and
// walks one operand of every distant two-qubit gate towards the other.
// The trio router keeps each Toffoli whole and moves all three
// operands to a common meeting point before emitting it, which is
// what lets the later lowering pass pick the cheap CX network for the
// realized placement.

#pragma once

#include <vector>

#include "trios/circuit.hpp"
#include "trios/topology.hpp"

namespace trios {

struct Layout {
  std::vector<int> log_to_phys;
  std::vector<int> phys_to_log;
};

// Logical qubit i on physical qubit i.
Layout identity_layout(int n_qubits);

// Builds a layout from the logical-to-physical side (must be a
// permutation of 0..n-1).
Layout make_layout(std::vector<int> log_to_phys);

// Applies `second` after `first`: logical -> first -> second.
Layout compose_layouts(const Layout& first, const Layout& second);

// Interaction-weighted placement: grows a mapped region outwards from
// the heaviest interacting pair, which lands on the best-connected
// part of the device.  Interaction weight is 1 per two-qubit gate and
// 2 per Toffoli operand pair.  Unused logical qubits fill the
// remaining physical qubits in ascending order.
Layout greedy_layout(const Circuit& circuit, const CouplingGraph& g);

struct RoutedCircuit {
  Circuit circuit;  // device-width, physical operands, SWAPs included
  Layout initial;
  Layout final;
  int swaps_added = 0;
};

// Routes a Toffoli-free circuit: for each two-qubit gate whose
// operands are apart, the first operand's data is swapped along the
// deterministic shortest path until the pair is coupled.  Throws
// CircuitError if a CCX is present.
RoutedCircuit route_baseline(const Circuit& in, const CouplingGraph& g,
                             const Layout& initial, bool noise_aware = false);

// Routes CCX operands as a group: the member with the smallest
// distance sum to the other two is the meeting point, and the other
// two are walked to positions coupled to it (shorter path first, ties
// by smaller physical index; the second path is recomputed after the
// first move, and if it would end on the first mover's new position
// it stops one vertex short, leaving that mover as the line middle).
// Everything else is routed like the baseline.
RoutedCircuit route_trios(const Circuit& in, const CouplingGraph& g,
                          const Layout& initial, bool noise_aware = false);

}  // namespace trios
