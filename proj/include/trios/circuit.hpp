// Gate-level circuit IR shared by every pass in the toolkit.
//
// Conventions, fixed project-wide:
//   * qubit 0 is the least significant bit of a basis-state index
//   * CX operands are (control, target); CCX operands are (control1,
//     control2, target)
//   * BARRIER takes no operands and acts as a full-width dependency

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trios {

enum class GateKind {
  H,
  X,
  T,
  Tdg,
  U1,
  U2,
  U3,
  RZ,
  RX,
  CX,
  CU1,
  SWAP,
  CCX,
  Measure,
  Barrier,
};

// Number of qubit operands a gate kind takes (0 for Barrier).
int operand_count(GateKind kind);

// Number of angle parameters a gate kind takes.
int param_count(GateKind kind);

bool is_one_qubit(GateKind kind);
bool is_two_qubit(GateKind kind);

// Lower-case mnemonic, matching the serialized form ("cx", "tdg", ...).
const std::string& gate_name(GateKind kind);

struct Gate {
  GateKind kind;
  std::vector<int> qubits;
  std::vector<double> params;
  int cbit = -1;  // classical target, Measure only
};

struct CircuitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  // Classical register carried along for measurement round-trips.
  int n_clbits() const { return n_clbits_; }
  void set_n_clbits(int n);

  // Validates operand count, operand range and pairwise distinctness,
  // and the parameter count for the kind.
  void append(GateKind kind, std::vector<int> qubits,
              std::vector<double> params = {}, int cbit = -1);

  void h(int q) { append(GateKind::H, {q}); }
  void x(int q) { append(GateKind::X, {q}); }
  void t(int q) { append(GateKind::T, {q}); }
  void tdg(int q) { append(GateKind::Tdg, {q}); }
  void u1(int q, double lambda) { append(GateKind::U1, {q}, {lambda}); }
  void u2(int q, double phi, double lambda) {
    append(GateKind::U2, {q}, {phi, lambda});
  }
  void u3(int q, double theta, double phi, double lambda) {
    append(GateKind::U3, {q}, {theta, phi, lambda});
  }
  void rz(int q, double theta) { append(GateKind::RZ, {q}, {theta}); }
  void rx(int q, double theta) { append(GateKind::RX, {q}, {theta}); }
  void cx(int control, int target) { append(GateKind::CX, {control, target}); }
  void cu1(int control, int target, double lambda) {
    append(GateKind::CU1, {control, target}, {lambda});
  }
  void swap(int a, int b) { append(GateKind::SWAP, {a, b}); }
  void ccx(int control1, int control2, int target) {
    append(GateKind::CCX, {control1, control2, target});
  }
  void measure(int q, int cbit);
  void barrier() { append(GateKind::Barrier, {}); }

  // Appends every gate of `other` (same width required).
  void extend(const Circuit& other);

  // Copy with `n_qubits` grown to `width`; gates are unchanged.
  Circuit widened(int width) const;

 private:
  int n_qubits_ = 0;
  int n_clbits_ = 0;
  std::vector<Gate> gates_;
};

struct GateCounts {
  int one_qubit = 0;
  int cnot = 0;
  int cu1 = 0;
  int swap = 0;
  int toffoli = 0;
  int measure = 0;
  // Two-qubit instructions as written: cnot + cu1 + swap.  After the
  // final lowering pass no SWAP or CU1 survives, so for reported
  // circuits this equals the plain CX count.
  int two_qubit_total = 0;
  int depth = 0;
};

// Counts by kind plus circuit depth.  Depth counts each gate as one
// layer on its operands; BARRIER synchronizes all qubits but adds no
// layer of its own.
GateCounts count_gates(const Circuit& circuit);

}  // namespace trios
