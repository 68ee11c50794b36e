// Dense unitary construction for small circuits, used as the
// correctness oracle throughout the test suite.
//
// Basis convention: little-endian, qubit 0 is the least significant
// bit of the row/column index.  Gates later in the circuit multiply on
// the left, so to_unitary(c) acting on a column state vector applies
// c's gates in program order.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "trios/circuit.hpp"

namespace trios {

using Matrix = Eigen::MatrixXcd;

// Full 2^n x 2^n unitary of the circuit.  Throws CircuitError for
// widths above 12 qubits or for circuits containing Measure.
Matrix to_unitary(const Circuit& circuit);

// Applies the circuit to one basis state and returns the resulting
// state vector (same width/content restrictions as to_unitary).
Eigen::VectorXcd apply_to_basis_state(const Circuit& circuit,
                                      std::uint64_t basis_index);

// True when a == phase * b for a single global phase, compared
// entrywise with absolute tolerance `tol`.  The phase is read off the
// largest-magnitude entry of b.
bool equivalent_up_to_phase(const Matrix& a, const Matrix& b, double tol);

// Permutation unitary of a logical-to-physical assignment: basis bit i
// is moved to bit log_to_phys[i].  Used to compare routed circuits
// against their unrouted reference.
Matrix permutation_unitary(const std::vector<int>& log_to_phys);

}  // namespace trios
