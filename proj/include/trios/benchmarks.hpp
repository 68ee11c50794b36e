// Generators for the evaluation suite: multiply-controlled NOT
// constructions, ripple-carry and Fourier adders, an incrementer, a
// Grover search instance, and two Toffoli-free baselines.
//
// Every family is parameterized by a width and each also has a pinned
// preset width used by the standard suite; the preset instances
// reproduce the gate tallies the routing studies are calibrated
// against.

#pragma once

#include <string>
#include <vector>

#include "trios/circuit.hpp"

namespace trios {

struct BenchmarkSpec {
  std::string name;
  int qubits;
  int toffolis;
  int cnots_after_8cnot;  // two-qubit tally with every CCX taken as 8 CX
};

// The eleven-entry standard suite, Toffoli-heavy families first.
const std::vector<BenchmarkSpec>& standard_suite();

const BenchmarkSpec* find_benchmark(const std::string& name);
std::vector<std::string> benchmark_names();

// Builds a suite circuit at its preset width.
Circuit make_benchmark(const std::string& name);

// Width meaning per family:
//   cnx_dirty, cnx_halfborrowed, cnx_logancilla, cnx_inplace: controls
//   cuccaro_adder, takahashi_adder, qft_adder: bits per operand
//   incrementer_borrowedbit: register bits
//   grovers: search qubits
//   bv, qaoa_complete: total qubits
Circuit make_benchmark(const std::string& name, int width);

// Two-qubit tally once each Toffoli is lowered to the 8-CX network;
// CU1 counts as a single two-qubit gate.
int cnots_after_8cnot(const Circuit& circuit);

}  // namespace trios
