#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trios/circuit.hpp"
#include "trios/qasm.hpp"

using namespace trios;

TEST_CASE("parses the supported statement forms") {
  const std::string text = R"(
OPENQASM 2.0;
include "qelib1.inc";
// a comment
qreg q[4];
creg c[2];
h q[0];
tdg q[1];
u2(0.1,0.2) q[2];
u3(0.1,0.2,0.3) q[3];
cx q[0],q[1];
cu1(pi/2) q[1], q[2];
swap q[2],q[3];
ccx q[0],q[1],q[2];
barrier q;
measure q[0] -> c[0];
)";
  Circuit c = parse_qasm_string(text);
  CHECK(c.n_qubits() == 4);
  CHECK(c.n_clbits() == 2);
  CHECK(c.size() == 10);
  GateCounts counts = count_gates(c);
  CHECK(counts.cnot == 1);
  CHECK(counts.cu1 == 1);
  CHECK(counts.swap == 1);
  CHECK(counts.toffoli == 1);
  CHECK(counts.measure == 1);
  CHECK(c.gates()[5].params[0] == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("angle expressions cover pi forms and decimals") {
  const std::string text =
      "OPENQASM 2.0;\nqreg q[1];\n"
      "u1(pi/2) q[0];\n"
      "u1(-pi/4) q[0];\n"
      "u1(3*pi/4) q[0];\n"
      "u1(2*pi) q[0];\n"
      "u1(0.25) q[0];\n"
      "u1(1e-3) q[0];\n"
      "u1(pi) q[0];\n";
  Circuit c = parse_qasm_string(text);
  const double pi = std::numbers::pi;
  const double expected[] = {pi / 2, -pi / 4, 3 * pi / 4, 2 * pi,
                             0.25,   1e-3,    pi};
  REQUIRE(c.size() == 7);
  for (int i = 0; i < 7; ++i) {
    CHECK(c.gates()[i].params[0] == doctest::Approx(expected[i]).epsilon(1e-15));
  }
}

TEST_CASE("serializer output reparses to the identical circuit") {
  Circuit c(3);
  c.h(0);
  c.u3(1, 0.1, std::numbers::pi / 7, -2.5);
  c.cu1(0, 2, 1.0 / 3.0);
  c.ccx(0, 1, 2);
  c.barrier();
  c.measure(2, 0);

  const std::string text = serialize_qasm(c);
  Circuit back = parse_qasm_string(text);

  REQUIRE(back.size() == c.size());
  CHECK(back.n_qubits() == c.n_qubits());
  CHECK(back.n_clbits() == c.n_clbits());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& a = c.gates()[i];
    const Gate& b = back.gates()[i];
    CHECK(a.kind == b.kind);
    CHECK(a.qubits == b.qubits);
    CHECK(a.cbit == b.cbit);
    REQUIRE(a.params.size() == b.params.size());
    for (std::size_t j = 0; j < a.params.size(); ++j) {
      // 17 significant digits reproduce the double bit for bit
      CHECK(a.params[j] == b.params[j]);
    }
  }

  CHECK(serialize_qasm(back) == text);
}

TEST_CASE("per-qubit barrier collapses to the full-width barrier") {
  Circuit c = parse_qasm_string(
      "OPENQASM 2.0;\nqreg q[3];\nbarrier q[0], q[1];\nbarrier q;\n");
  CHECK(c.size() == 2);
  CHECK(c.gates()[0].kind == GateKind::Barrier);
  CHECK(c.gates()[1].kind == GateKind::Barrier);
}

TEST_CASE("malformed programs fail with the offending line") {
  auto message = [](const std::string& text) {
    try {
      parse_qasm_string(text);
    } catch (const QasmError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };

  CHECK(message("OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n")
            .find("unknown gate") != std::string::npos);
  CHECK(message("OPENQASM 2.0;\nqreg q[2];\nh q[5];\n").find("line 3") !=
        std::string::npos);
  CHECK(message("qreg q[2];\n").find("header") != std::string::npos);
  CHECK(message("OPENQASM 2.0;\nh q[0];\n").find("qreg") != std::string::npos);
  CHECK(message("OPENQASM 2.0;\nqreg q[2];\nqreg r[2];\n")
            .find("one qreg") != std::string::npos);
  CHECK(message("OPENQASM 2.0;\nqreg q[2];\nmeasure q[0] -> c[0];\n")
            .find("creg") != std::string::npos);
  CHECK(message("OPENQASM 2.0;\nqreg q[2];\nh q[0]\n").find("';'") !=
        std::string::npos);
  CHECK(message("OPENQASM 2.0;\nqreg q[2];\nu1 q[0];\n")
            .find("parameter") != std::string::npos);
  CHECK(message("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[0];\n")
            .find("distinct") != std::string::npos);
  CHECK(message("OPENQASM 2.0;\nqreg q[2];\nh r[0];\n")
            .find("unknown register") != std::string::npos);
  CHECK(message("") == "no qreg declared");
}

TEST_CASE("files round-trip through disk") {
  Circuit c(2);
  c.h(0);
  c.cx(0, 1);
  const std::string path = "roundtrip_test.qasm";
  write_qasm_file(c, path);
  Circuit back = parse_qasm_file(path);
  CHECK(back.size() == 2);
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_qasm_file("does_not_exist.qasm"), QasmError);
}
