#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "trios/circuit.hpp"
#include "trios/unitary.hpp"

using namespace trios;

namespace {

Matrix single(GateKind kind, int n, std::vector<int> qubits,
              std::vector<double> params = {}) {
  Circuit c(n);
  c.append(kind, std::move(qubits), std::move(params));
  return to_unitary(c);
}

}  // namespace

TEST_CASE("CX uses little-endian basis ordering") {
  // control = qubit 0 (LSB), target = qubit 1: |01> <-> |11>,
  // i.e. indices 1 and 3 exchange.
  Matrix u = single(GateKind::CX, 2, {0, 1});
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 1;
  expected(3, 1) = 1;
  expected(2, 2) = 1;
  expected(1, 3) = 1;
  CHECK((u - expected).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("CCX flips the target only when both controls are set") {
  Matrix u = single(GateKind::CCX, 3, {0, 1, 2});
  for (int x = 0; x < 8; ++x) {
    int y = x;
    if ((x & 1) && (x & 2)) y = x ^ 4;
    CHECK(std::abs(u(y, x) - std::complex<double>(1.0)) < 1e-15);
  }
}

TEST_CASE("SWAP exchanges basis bits") {
  Matrix u = single(GateKind::SWAP, 2, {0, 1});
  CHECK(std::abs(u(2, 1) - std::complex<double>(1.0)) < 1e-15);
  CHECK(std::abs(u(1, 2) - std::complex<double>(1.0)) < 1e-15);
  CHECK(std::abs(u(0, 0) - std::complex<double>(1.0)) < 1e-15);
  CHECK(std::abs(u(3, 3) - std::complex<double>(1.0)) < 1e-15);
}

TEST_CASE("T equals U1(pi/4) exactly") {
  Matrix t = single(GateKind::T, 1, {0});
  Matrix u1 = single(GateKind::U1, 1, {0}, {std::numbers::pi / 4.0});
  CHECK((t - u1).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("U2 equals U3 with theta = pi/2") {
  Matrix u2 = single(GateKind::U2, 1, {0}, {0.3, 1.1});
  Matrix u3 = single(GateKind::U3, 1, {0}, {std::numbers::pi / 2.0, 0.3, 1.1});
  CHECK((u2 - u3).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("RZ differs from U1 only by global phase") {
  Matrix rz = single(GateKind::RZ, 1, {0}, {0.7});
  Matrix u1 = single(GateKind::U1, 1, {0}, {0.7});
  CHECK((rz - u1).cwiseAbs().maxCoeff() > 0.1);
  CHECK(equivalent_up_to_phase(rz, u1, 1e-12));
}

TEST_CASE("CU1 phases only the |11> component") {
  Matrix u = single(GateKind::CU1, 2, {0, 1}, {0.9});
  Matrix expected = Matrix::Identity(4, 4);
  expected(3, 3) = std::exp(std::complex<double>(0.0, 0.9));
  CHECK((u - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("gates later in the program multiply on the left") {
  Circuit c(1);
  c.h(0);
  c.t(0);
  Matrix u = to_unitary(c);
  Matrix h = single(GateKind::H, 1, {0});
  Matrix t = single(GateKind::T, 1, {0});
  CHECK((u - t * h).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("apply_to_basis_state builds a GHZ state") {
  Circuit c(3);
  c.h(0);
  c.cx(0, 1);
  c.cx(1, 2);
  Eigen::VectorXcd state = apply_to_basis_state(c, 0);
  const double amp = 1.0 / std::numbers::sqrt2;
  CHECK(std::abs(state(0) - std::complex<double>(amp)) < 1e-12);
  CHECK(std::abs(state(7) - std::complex<double>(amp)) < 1e-12);
  for (int i = 1; i < 7; ++i) CHECK(std::abs(state(i)) < 1e-12);
}

TEST_CASE("equivalent_up_to_phase accepts a global phase and nothing else") {
  Matrix a = single(GateKind::H, 1, {0});
  const std::complex<double> phase = std::exp(std::complex<double>(0.0, 1.2));
  Matrix b = phase * a;
  CHECK(equivalent_up_to_phase(a, b, 1e-12));
  CHECK(equivalent_up_to_phase(b, a, 1e-12));

  Matrix c = a;
  c(1, 1) = -c(1, 1);
  CHECK_FALSE(equivalent_up_to_phase(a, c, 1e-9));

  // scaling by a non-unit factor is not a phase
  CHECK_FALSE(equivalent_up_to_phase(a, Matrix(2.0 * a), 1e-9));
}

TEST_CASE("permutation_unitary rearranges basis bits") {
  Matrix u = permutation_unitary({1, 0});
  Matrix swap = single(GateKind::SWAP, 2, {0, 1});
  CHECK((u - swap).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(permutation_unitary({0, 0}), CircuitError);
}

TEST_CASE("to_unitary rejects measurements and oversized circuits") {
  Circuit c(1);
  c.measure(0, 0);
  CHECK_THROWS_AS(to_unitary(c), CircuitError);
  CHECK_THROWS_AS(to_unitary(Circuit(13)), CircuitError);
}
