#include <doctest.h>

#include <sstream>

#include "trios/circuit.hpp"
#include "trios/decompose.hpp"
#include "trios/routing.hpp"
#include "trios/topology.hpp"
#include "trios/unitary.hpp"

using namespace trios;

namespace {

// Checks that routing + final lowering preserved the circuit's action:
// undo the final placement, apply the routed unitary, apply the
// initial placement, and compare against the unrouted reference.
bool preserves_semantics(const Circuit& reference, const Circuit& routed,
                         const Layout& initial, const Layout& final_layout,
                         double tol) {
  const Matrix u_ref = to_unitary(reference);
  const Matrix u_routed = to_unitary(routed);
  const Matrix p0 = permutation_unitary(initial.log_to_phys);
  const Matrix pf = permutation_unitary(final_layout.log_to_phys);
  return equivalent_up_to_phase(pf.adjoint() * u_routed * p0, u_ref, tol);
}

}  // namespace

TEST_CASE("layout helpers validate and compose") {
  Layout id = identity_layout(4);
  CHECK(id.log_to_phys == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(make_layout({0, 0, 1, 2}), CircuitError);

  Layout rot = make_layout({1, 2, 3, 0});
  Layout composed = compose_layouts(rot, rot);
  CHECK(composed.log_to_phys == std::vector<int>{2, 3, 0, 1});
  CHECK(compose_layouts(id, rot).log_to_phys == rot.log_to_phys);
}

TEST_CASE("adjacent gates route without SWAPs") {
  CouplingGraph g = johannesburg_topology();
  Circuit c(20);
  c.cx(0, 1);
  c.cx(5, 10);
  RoutedCircuit r = route_baseline(c, g, identity_layout(20));
  CHECK(r.swaps_added == 0);
  CHECK(r.circuit.size() == 2);
  CHECK(r.final.log_to_phys == identity_layout(20).log_to_phys);
}

TEST_CASE("baseline walks the first operand along the shortest path") {
  CouplingGraph g = johannesburg_topology();
  Circuit c(20);
  c.cx(2, 19);
  RoutedCircuit r = route_baseline(c, g, identity_layout(20));
  // path 2-3-4-9-14-19: four SWAPs, then CX on the 14-19 edge
  CHECK(r.swaps_added == 4);
  const Gate& last = r.circuit.gates().back();
  CHECK(last.kind == GateKind::CX);
  CHECK(last.qubits == std::vector<int>{14, 19});
  CHECK(r.final.log_to_phys[2] == 14);
}

TEST_CASE("baseline refuses undecomposed Toffolis") {
  CouplingGraph g = johannesburg_topology();
  Circuit c(20);
  c.ccx(0, 1, 2);
  CHECK_THROWS_AS(route_baseline(c, g, identity_layout(20)), CircuitError);
}

TEST_CASE("trio routing meets at the cheapest member") {
  CouplingGraph g = johannesburg_topology();
  Circuit c(20);
  c.ccx(2, 6, 19);
  RoutedCircuit r = route_trios(c, g, identity_layout(20));
  CHECK(r.swaps_added == 7);
  const Gate& ccx = r.circuit.gates().back();
  CHECK(ccx.kind == GateKind::CCX);
  CHECK(ccx.qubits == std::vector<int>{2, 1, 3});

  Circuit lowered = pass2_decompose(r.circuit, g);
  GateCounts counts = count_gates(lowered);
  CHECK(counts.cnot == 7 * 3 + 8);
  CHECK(counts.swap == 0);
}

TEST_CASE("an already-coupled trio costs nothing") {
  CouplingGraph g = johannesburg_topology();
  Circuit c(20);
  c.ccx(3, 1, 2);
  RoutedCircuit r = route_trios(c, g, identity_layout(20));
  CHECK(r.swaps_added == 0);
  CHECK(r.circuit.gates().back().qubits == std::vector<int>{3, 1, 2});
  CHECK(count_gates(pass2_decompose(r.circuit, g)).cnot == 8);
}

TEST_CASE("trio routing on a line pulls both ends inwards") {
  CouplingGraph g = line_topology(5);
  Circuit c(5);
  c.ccx(0, 2, 4);
  RoutedCircuit r = route_trios(c, g, identity_layout(5));
  CHECK(r.swaps_added == 2);
  CHECK(r.circuit.gates().back().qubits == std::vector<int>{1, 2, 3});
  CHECK(preserves_semantics(c, pass2_decompose(r.circuit, g), r.initial,
                            r.final, 1e-9));
}

TEST_CASE("second mover stops short when its slot is already taken") {
  // star: 2 and 3 can only reach 0 through 1
  std::istringstream edges("0 1\n1 2\n1 3\n");
  CouplingGraph g = topology_from_edge_list(edges);
  Circuit c(4);
  c.ccx(0, 2, 3);
  RoutedCircuit r = route_trios(c, g, identity_layout(4));
  CHECK(r.swaps_added == 1);
  const Gate& ccx = r.circuit.gates().back();
  CHECK(ccx.qubits == std::vector<int>{0, 1, 3});
  // the first mover ended adjacent to the destination and serves as
  // the middle of the line 0-1-3
  CHECK(preserves_semantics(c, pass2_decompose(r.circuit, g), r.initial,
                            r.final, 1e-9));
}

TEST_CASE("measurements and barriers follow the moved qubits") {
  CouplingGraph g = line_topology(4);
  Circuit c(4);
  c.cx(0, 3);
  c.barrier();
  c.measure(0, 0);
  RoutedCircuit r = route_baseline(c, g, identity_layout(4));
  CHECK(r.swaps_added == 2);
  const Gate& m = r.circuit.gates().back();
  CHECK(m.kind == GateKind::Measure);
  CHECK(m.qubits[0] == 2);  // logical 0 walked to position 2
  CHECK(m.cbit == 0);
}

TEST_CASE("routing starts from a non-identity layout") {
  CouplingGraph g = line_topology(4);
  Circuit c(4);
  c.cx(0, 1);
  Layout start = make_layout({3, 0, 1, 2});
  RoutedCircuit r = route_baseline(c, g, start, false);
  CHECK(r.swaps_added == 2);  // 3 and 0 are three hops apart
  CHECK(preserves_semantics(c, pass2_decompose(r.circuit, g), r.initial,
                            r.final, 1e-9));
}

TEST_CASE("noise-aware routing avoids heavy edges") {
  // 0-2 direct but heavy; 0-1-2 light
  std::istringstream edges("0 2 10.0\n0 1 1.0\n1 2 1.0\n3 0 1.0\n");
  CouplingGraph g = topology_from_edge_list(edges);
  Circuit c(4);
  c.cx(3, 2);  // 3-0-1-2 light path vs 3-0-2 heavy
  RoutedCircuit hops = route_baseline(c, g, identity_layout(4), false);
  RoutedCircuit light = route_baseline(c, g, identity_layout(4), true);
  CHECK(hops.swaps_added == 1);
  CHECK(light.swaps_added == 2);
}

TEST_CASE("greedy layout keeps an adjacent pair adjacent") {
  CouplingGraph g = line_topology(4);
  Circuit c(4);
  c.cx(0, 1);
  Layout greedy = greedy_layout(c, g);
  CHECK(g.has_edge(greedy.log_to_phys[0], greedy.log_to_phys[1]));
  RoutedCircuit a = route_baseline(c, g, identity_layout(4));
  RoutedCircuit b = route_baseline(c, g, greedy);
  CHECK(count_gates(a.circuit).two_qubit_total ==
        count_gates(b.circuit).two_qubit_total);
}

TEST_CASE("greedy layout drops a lone trio onto the hub triangle") {
  CouplingGraph g = clusters_topology(4, 5);
  Circuit c(3);
  c.ccx(0, 1, 2);
  Layout greedy = greedy_layout(c, g);
  TrioCost tc = trio_cost(g, greedy.log_to_phys[0], greedy.log_to_phys[1],
                          greedy.log_to_phys[2]);
  CHECK(tc.cost == doctest::Approx(2.0));  // optimal placement cost
}

TEST_CASE("greedy layout of an idle circuit is the identity") {
  CouplingGraph g = line_topology(4);
  Circuit c(3);
  c.h(0);
  Layout greedy = greedy_layout(c, g);
  CHECK(greedy.log_to_phys == std::vector<int>{0, 1, 2, 3});
}
