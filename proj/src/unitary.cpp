#include "trios/unitary.hpp"

#include <cmath>
#include <numbers>

namespace trios {

namespace {

using Cplx = std::complex<double>;

constexpr int kMaxUnitaryQubits = 12;

// 2x2 matrix for a one-qubit kind, row-major {m00, m01, m10, m11}.
std::array<Cplx, 4> one_qubit_matrix(const Gate& g) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const Cplx i(0.0, 1.0);
  switch (g.kind) {
    case GateKind::H:
      return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::T:
      return {1.0, 0.0, 0.0, std::exp(i * (std::numbers::pi / 4.0))};
    case GateKind::Tdg:
      return {1.0, 0.0, 0.0, std::exp(-i * (std::numbers::pi / 4.0))};
    case GateKind::U1:
      return {1.0, 0.0, 0.0, std::exp(i * g.params[0])};
    case GateKind::U2: {
      const double phi = g.params[0], lambda = g.params[1];
      return {inv_sqrt2, -std::exp(i * lambda) * inv_sqrt2,
              std::exp(i * phi) * inv_sqrt2,
              std::exp(i * (phi + lambda)) * inv_sqrt2};
    }
    case GateKind::U3: {
      const double theta = g.params[0], phi = g.params[1],
                   lambda = g.params[2];
      const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
      return {Cplx(c), -std::exp(i * lambda) * s, std::exp(i * phi) * s,
              std::exp(i * (phi + lambda)) * c};
    }
    case GateKind::RZ: {
      const double half = g.params[0] / 2.0;
      return {std::exp(-i * half), 0.0, 0.0, std::exp(i * half)};
    }
    case GateKind::RX: {
      const double c = std::cos(g.params[0] / 2.0);
      const double s = std::sin(g.params[0] / 2.0);
      return {Cplx(c), -i * s, -i * s, Cplx(c)};
    }
    default:
      throw CircuitError("not a one-qubit unitary gate: " + gate_name(g.kind));
  }
}

// Applies one gate in place to every column of `u`.
void apply_gate(Matrix& u, const Gate& g, int n_qubits) {
  const std::int64_t dim = std::int64_t{1} << n_qubits;
  switch (g.kind) {
    case GateKind::Barrier:
      return;
    case GateKind::Measure:
      throw CircuitError("to_unitary: circuit contains a measurement");
    case GateKind::CX: {
      const std::int64_t c = std::int64_t{1} << g.qubits[0];
      const std::int64_t t = std::int64_t{1} << g.qubits[1];
      for (std::int64_t col = 0; col < u.cols(); ++col) {
        for (std::int64_t row = 0; row < dim; ++row) {
          if ((row & c) && !(row & t)) {
            std::swap(u(row, col), u(row | t, col));
          }
        }
      }
      return;
    }
    case GateKind::CCX: {
      const std::int64_t c1 = std::int64_t{1} << g.qubits[0];
      const std::int64_t c2 = std::int64_t{1} << g.qubits[1];
      const std::int64_t t = std::int64_t{1} << g.qubits[2];
      for (std::int64_t col = 0; col < u.cols(); ++col) {
        for (std::int64_t row = 0; row < dim; ++row) {
          if ((row & c1) && (row & c2) && !(row & t)) {
            std::swap(u(row, col), u(row | t, col));
          }
        }
      }
      return;
    }
    case GateKind::SWAP: {
      const std::int64_t a = std::int64_t{1} << g.qubits[0];
      const std::int64_t b = std::int64_t{1} << g.qubits[1];
      for (std::int64_t col = 0; col < u.cols(); ++col) {
        for (std::int64_t row = 0; row < dim; ++row) {
          if ((row & a) && !(row & b)) {
            std::swap(u(row, col), u((row ^ a) | b, col));
          }
        }
      }
      return;
    }
    case GateKind::CU1: {
      const std::int64_t c = std::int64_t{1} << g.qubits[0];
      const std::int64_t t = std::int64_t{1} << g.qubits[1];
      const Cplx phase = std::exp(Cplx(0.0, 1.0) * g.params[0]);
      for (std::int64_t col = 0; col < u.cols(); ++col) {
        for (std::int64_t row = 0; row < dim; ++row) {
          if ((row & c) && (row & t)) u(row, col) *= phase;
        }
      }
      return;
    }
    default: {
      const std::array<Cplx, 4> m = one_qubit_matrix(g);
      const std::int64_t t = std::int64_t{1} << g.qubits[0];
      for (std::int64_t col = 0; col < u.cols(); ++col) {
        for (std::int64_t row = 0; row < dim; ++row) {
          if (row & t) continue;
          const Cplx lo = u(row, col);
          const Cplx hi = u(row | t, col);
          u(row, col) = m[0] * lo + m[1] * hi;
          u(row | t, col) = m[2] * lo + m[3] * hi;
        }
      }
      return;
    }
  }
}

}  // namespace

Matrix to_unitary(const Circuit& circuit) {
  if (circuit.n_qubits() > kMaxUnitaryQubits) {
    throw CircuitError("to_unitary supports at most " +
                       std::to_string(kMaxUnitaryQubits) + " qubits");
  }
  const std::int64_t dim = std::int64_t{1} << circuit.n_qubits();
  Matrix u = Matrix::Identity(dim, dim);
  for (const Gate& g : circuit.gates()) {
    apply_gate(u, g, circuit.n_qubits());
  }
  return u;
}

Eigen::VectorXcd apply_to_basis_state(const Circuit& circuit,
                                      std::uint64_t basis_index) {
  if (circuit.n_qubits() > kMaxUnitaryQubits) {
    throw CircuitError("apply_to_basis_state supports at most " +
                       std::to_string(kMaxUnitaryQubits) + " qubits");
  }
  const std::int64_t dim = std::int64_t{1} << circuit.n_qubits();
  if (basis_index >= static_cast<std::uint64_t>(dim)) {
    throw CircuitError("basis index out of range");
  }
  Matrix state = Matrix::Zero(dim, 1);
  state(static_cast<std::int64_t>(basis_index), 0) = 1.0;
  for (const Gate& g : circuit.gates()) {
    apply_gate(state, g, circuit.n_qubits());
  }
  return state.col(0);
}

bool equivalent_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::int64_t best_r = 0, best_c = 0;
  double best_mag = -1.0;
  for (std::int64_t r = 0; r < b.rows(); ++r) {
    for (std::int64_t c = 0; c < b.cols(); ++c) {
      const double mag = std::abs(b(r, c));
      if (mag > best_mag) {
        best_mag = mag;
        best_r = r;
        best_c = c;
      }
    }
  }
  if (best_mag <= tol) {
    // b is numerically zero; equality reduces to a being zero too.
    return a.cwiseAbs().maxCoeff() <= tol;
  }
  Cplx phase = a(best_r, best_c) / b(best_r, best_c);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  phase /= std::abs(phase);
  return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

Matrix permutation_unitary(const std::vector<int>& log_to_phys) {
  const int n = static_cast<int>(log_to_phys.size());
  if (n > kMaxUnitaryQubits) {
    throw CircuitError("permutation_unitary supports at most " +
                       std::to_string(kMaxUnitaryQubits) + " qubits");
  }
  std::vector<bool> seen(log_to_phys.size(), false);
  for (int p : log_to_phys) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw CircuitError("permutation_unitary: not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  const std::int64_t dim = std::int64_t{1} << n;
  Matrix u = Matrix::Zero(dim, dim);
  for (std::int64_t x = 0; x < dim; ++x) {
    std::int64_t y = 0;
    for (int i = 0; i < n; ++i) {
      if (x & (std::int64_t{1} << i)) y |= std::int64_t{1} << log_to_phys[i];
    }
    u(y, x) = 1.0;
  }
  return u;
}

}  // namespace trios
