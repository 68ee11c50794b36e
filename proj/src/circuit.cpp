#include "trios/circuit.hpp"

#include <algorithm>
#include <array>

namespace trios {

namespace {

struct KindInfo {
  const char* name;
  int operands;
  int params;
};

const KindInfo& info(GateKind kind) {
  static const std::array<KindInfo, 15> table = {{
      {"h", 1, 0},
      {"x", 1, 0},
      {"t", 1, 0},
      {"tdg", 1, 0},
      {"u1", 1, 1},
      {"u2", 1, 2},
      {"u3", 1, 3},
      {"rz", 1, 1},
      {"rx", 1, 1},
      {"cx", 2, 0},
      {"cu1", 2, 1},
      {"swap", 2, 0},
      {"ccx", 3, 0},
      {"measure", 1, 0},
      {"barrier", 0, 0},
  }};
  return table[static_cast<std::size_t>(kind)];
}

}  // namespace

int operand_count(GateKind kind) { return info(kind).operands; }

int param_count(GateKind kind) { return info(kind).params; }

bool is_one_qubit(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::U1:
    case GateKind::U2:
    case GateKind::U3:
    case GateKind::RZ:
    case GateKind::RX:
      return true;
    default:
      return false;
  }
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CX || kind == GateKind::CU1 ||
         kind == GateKind::SWAP;
}

const std::string& gate_name(GateKind kind) {
  static const std::array<std::string, 15> names = {
      "h",  "x",   "t",    "tdg", "u1",  "u2",      "u3",     "rz",
      "rx", "cx",  "cu1",  "swap", "ccx", "measure", "barrier"};
  return names[static_cast<std::size_t>(kind)];
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0) throw CircuitError("circuit width must be non-negative");
}

void Circuit::set_n_clbits(int n) {
  if (n < 0) throw CircuitError("classical register size must be non-negative");
  n_clbits_ = n;
}

void Circuit::append(GateKind kind, std::vector<int> qubits,
                     std::vector<double> params, int cbit) {
  const KindInfo& k = info(kind);
  if (static_cast<int>(qubits.size()) != k.operands) {
    throw CircuitError(std::string(k.name) + " expects " +
                       std::to_string(k.operands) + " operand(s), got " +
                       std::to_string(qubits.size()));
  }
  if (static_cast<int>(params.size()) != k.params) {
    throw CircuitError(std::string(k.name) + " expects " +
                       std::to_string(k.params) + " parameter(s), got " +
                       std::to_string(params.size()));
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_qubits_) {
      throw CircuitError("qubit index " + std::to_string(qubits[i]) +
                         " out of range for width " +
                         std::to_string(n_qubits_));
    }
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw CircuitError(std::string(k.name) +
                           " operands must be distinct qubits");
      }
    }
  }
  if (kind == GateKind::Measure) {
    if (cbit < 0) throw CircuitError("measure requires a classical bit");
    if (cbit >= n_clbits_) n_clbits_ = cbit + 1;
  }
  gates_.push_back(Gate{kind, std::move(qubits), std::move(params), cbit});
}

void Circuit::measure(int q, int cbit) {
  append(GateKind::Measure, {q}, {}, cbit);
}

void Circuit::extend(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw CircuitError("cannot extend: circuit widths differ");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  n_clbits_ = std::max(n_clbits_, other.n_clbits_);
}

Circuit Circuit::widened(int width) const {
  if (width < n_qubits_) {
    throw CircuitError("widened() cannot shrink a circuit");
  }
  Circuit out = *this;
  out.n_qubits_ = width;
  return out;
}

GateCounts count_gates(const Circuit& circuit) {
  GateCounts counts;
  std::vector<int> layer(static_cast<std::size_t>(circuit.n_qubits()), 0);
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::CX:
        ++counts.cnot;
        break;
      case GateKind::CU1:
        ++counts.cu1;
        break;
      case GateKind::SWAP:
        ++counts.swap;
        break;
      case GateKind::CCX:
        ++counts.toffoli;
        break;
      case GateKind::Measure:
        ++counts.measure;
        break;
      case GateKind::Barrier:
        break;
      default:
        ++counts.one_qubit;
        break;
    }
    if (g.kind == GateKind::Barrier) {
      int level = 0;
      for (int l : layer) level = std::max(level, l);
      std::fill(layer.begin(), layer.end(), level);
    } else {
      int level = 0;
      for (int q : g.qubits) level = std::max(level, layer[q]);
      ++level;
      for (int q : g.qubits) layer[q] = level;
    }
  }
  counts.two_qubit_total = counts.cnot + counts.cu1 + counts.swap;
  for (int l : layer) counts.depth = std::max(counts.depth, l);
  return counts;
}

}  // namespace trios
