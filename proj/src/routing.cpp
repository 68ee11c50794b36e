#include "trios/routing.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

namespace trios {

Layout identity_layout(int n_qubits) {
  Layout l;
  l.log_to_phys.resize(static_cast<std::size_t>(n_qubits));
  l.phys_to_log.resize(static_cast<std::size_t>(n_qubits));
  for (int i = 0; i < n_qubits; ++i) {
    l.log_to_phys[static_cast<std::size_t>(i)] = i;
    l.phys_to_log[static_cast<std::size_t>(i)] = i;
  }
  return l;
}

Layout make_layout(std::vector<int> log_to_phys) {
  const int n = static_cast<int>(log_to_phys.size());
  Layout l;
  l.log_to_phys = std::move(log_to_phys);
  l.phys_to_log.assign(static_cast<std::size_t>(n), -1);
  for (int q = 0; q < n; ++q) {
    const int p = l.log_to_phys[static_cast<std::size_t>(q)];
    if (p < 0 || p >= n || l.phys_to_log[static_cast<std::size_t>(p)] >= 0) {
      throw CircuitError("layout is not a permutation");
    }
    l.phys_to_log[static_cast<std::size_t>(p)] = q;
  }
  return l;
}

Layout compose_layouts(const Layout& first, const Layout& second) {
  if (first.log_to_phys.size() != second.log_to_phys.size()) {
    throw CircuitError("layout sizes differ");
  }
  std::vector<int> combined(first.log_to_phys.size());
  for (std::size_t q = 0; q < combined.size(); ++q) {
    combined[q] = second.log_to_phys[static_cast<std::size_t>(
        first.log_to_phys[q])];
  }
  return make_layout(std::move(combined));
}

namespace {

// Shared movement state for both routers.
class Mover {
 public:
  Mover(const Circuit& in, const CouplingGraph& g, const Layout& initial,
        bool noise_aware)
      : in_(in), g_(g), weighted_(noise_aware), layout_(initial) {
    if (in.n_qubits() > g.n_qubits()) {
      throw CircuitError("circuit is wider than the device");
    }
    if (static_cast<int>(initial.log_to_phys.size()) != g.n_qubits()) {
      throw CircuitError("layout size must match the device");
    }
    out_.circuit = Circuit(g.n_qubits());
    out_.circuit.set_n_clbits(in.n_clbits());
    out_.initial = initial;
  }

  int phys(int logical) const {
    return layout_.log_to_phys[static_cast<std::size_t>(logical)];
  }

  void swap_physical(int u, int v) {
    out_.circuit.swap(u, v);
    ++out_.swaps_added;
    const int lu = layout_.phys_to_log[static_cast<std::size_t>(u)];
    const int lv = layout_.phys_to_log[static_cast<std::size_t>(v)];
    layout_.phys_to_log[static_cast<std::size_t>(u)] = lv;
    layout_.phys_to_log[static_cast<std::size_t>(v)] = lu;
    layout_.log_to_phys[static_cast<std::size_t>(lu)] = v;
    layout_.log_to_phys[static_cast<std::size_t>(lv)] = u;
  }

  // Swaps the data at `from` along `path`, stopping at path[last].
  void walk(const std::vector<int>& path, std::size_t last) {
    for (std::size_t i = 0; i < last; ++i) {
      swap_physical(path[i], path[i + 1]);
    }
  }

  // Brings the operands of a two-qubit gate together by walking the
  // first operand until the pair is coupled, then emits the gate.
  void route_pair(const Gate& gate) {
    const int pa = phys(gate.qubits[0]);
    const int pb = phys(gate.qubits[1]);
    if (!g_.has_edge(pa, pb)) {
      const std::vector<int> path = shortest_path(g_, pa, pb, weighted_);
      walk(path, path.size() - 2);
    }
    emit_mapped(gate);
  }

  void route_trio(const Gate& gate) {
    const int p1 = phys(gate.qubits[0]);
    const int p2 = phys(gate.qubits[1]);
    const int pt = phys(gate.qubits[2]);
    const int dest = trio_cost(g_, p1, p2, pt, weighted_).destination;

    int movers[2];
    int n_movers = 0;
    for (int p : {p1, p2, pt}) {
      if (p != dest) movers[n_movers++] = p;
    }

    // shorter path first, ties by smaller current position
    std::vector<int> paths[2] = {
        shortest_path(g_, movers[0], dest, weighted_),
        shortest_path(g_, movers[1], dest, weighted_),
    };
    int first = 0;
    if (paths[1].size() < paths[0].size() ||
        (paths[1].size() == paths[0].size() && movers[1] < movers[0])) {
      first = 1;
    }
    const int second = 1 - first;

    walk(paths[first], paths[first].size() - 2);
    const int first_final = paths[first][paths[first].size() - 2];

    // recompute the second path after the first move; it can only
    // meet the first mover at its own penultimate vertex, in which
    // case the second stops a step short and the first mover serves
    // as the line middle
    const std::vector<int> second_path =
        shortest_path(g_, movers[second], dest, weighted_);
    std::size_t stop = second_path.size() - 2;
    if (second_path[stop] == first_final && stop > 0) --stop;
    walk(second_path, stop);

    emit_mapped(gate);
  }

  void emit_mapped(const Gate& gate) {
    std::vector<int> mapped(gate.qubits.size());
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
      mapped[i] = phys(gate.qubits[i]);
    }
    out_.circuit.append(gate.kind, std::move(mapped), gate.params, gate.cbit);
  }

  RoutedCircuit finish() {
    out_.final = layout_;
    return std::move(out_);
  }

  const Circuit& in_;
  const CouplingGraph& g_;
  const bool weighted_;
  Layout layout_;
  RoutedCircuit out_;
};

}  // namespace

RoutedCircuit route_baseline(const Circuit& in, const CouplingGraph& g,
                             const Layout& initial, bool noise_aware) {
  Mover m(in, g, initial, noise_aware);
  for (const Gate& gate : in.gates()) {
    switch (gate.kind) {
      case GateKind::CCX:
        throw CircuitError(
            "baseline router needs Toffolis decomposed before routing");
      case GateKind::CX:
      case GateKind::CU1:
      case GateKind::SWAP:
        m.route_pair(gate);
        break;
      case GateKind::Barrier:
        m.out_.circuit.barrier();
        break;
      default:
        m.emit_mapped(gate);
        break;
    }
  }
  return m.finish();
}

RoutedCircuit route_trios(const Circuit& in, const CouplingGraph& g,
                          const Layout& initial, bool noise_aware) {
  Mover m(in, g, initial, noise_aware);
  for (const Gate& gate : in.gates()) {
    switch (gate.kind) {
      case GateKind::CCX:
        m.route_trio(gate);
        break;
      case GateKind::CX:
      case GateKind::CU1:
      case GateKind::SWAP:
        m.route_pair(gate);
        break;
      case GateKind::Barrier:
        m.out_.circuit.barrier();
        break;
      default:
        m.emit_mapped(gate);
        break;
    }
  }
  return m.finish();
}

Layout greedy_layout(const Circuit& circuit, const CouplingGraph& g) {
  const int n_log = circuit.n_qubits();
  const int n_phys = g.n_qubits();
  if (n_log > n_phys) {
    throw CircuitError("circuit is wider than the device");
  }

  // logical interaction weights
  std::vector<std::vector<double>> w(
      static_cast<std::size_t>(n_log),
      std::vector<double>(static_cast<std::size_t>(n_log), 0.0));
  auto bump = [&](int a, int b, double amount) {
    w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += amount;
    w[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += amount;
  };
  for (const Gate& gate : circuit.gates()) {
    if (is_two_qubit(gate.kind)) {
      bump(gate.qubits[0], gate.qubits[1], 1.0);
    } else if (gate.kind == GateKind::CCX) {
      bump(gate.qubits[0], gate.qubits[1], 2.0);
      bump(gate.qubits[0], gate.qubits[2], 2.0);
      bump(gate.qubits[1], gate.qubits[2], 2.0);
    }
  }

  std::vector<double> wdeg(static_cast<std::size_t>(n_log), 0.0);
  for (int a = 0; a < n_log; ++a) {
    for (int b = 0; b < n_log; ++b) {
      wdeg[static_cast<std::size_t>(a)] +=
          w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
  }

  std::vector<int> log_to_phys(static_cast<std::size_t>(n_phys), -1);
  std::vector<bool> phys_used(static_cast<std::size_t>(n_phys), false);
  std::vector<bool> placed(static_cast<std::size_t>(n_log), false);

  // hop distances, computed lazily per physical source
  std::map<int, std::vector<int>> dist_cache;
  auto dist = [&](int from, int to) {
    auto it = dist_cache.find(from);
    if (it == dist_cache.end()) {
      it = dist_cache.emplace(from, distances_from(g, from)).first;
    }
    const int d = it->second[static_cast<std::size_t>(to)];
    return d < 0 ? n_phys : d;  // unreachable: worse than any real hop count
  };

  auto place = [&](int logical, int physical) {
    log_to_phys[static_cast<std::size_t>(logical)] = physical;
    phys_used[static_cast<std::size_t>(physical)] = true;
    placed[static_cast<std::size_t>(logical)] = true;
  };

  // seed with the heaviest interacting pair on the best-connected edge
  double best_w = 0.0;
  int seed_a = -1, seed_b = -1;
  for (int a = 0; a < n_log; ++a) {
    for (int b = a + 1; b < n_log; ++b) {
      if (w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >
          best_w) {
        best_w = w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        seed_a = a;
        seed_b = b;
      }
    }
  }

  if (seed_a >= 0) {
    if (wdeg[static_cast<std::size_t>(seed_b)] >
        wdeg[static_cast<std::size_t>(seed_a)]) {
      std::swap(seed_a, seed_b);
    }
    int anchor_phys = 0;
    for (int p = 1; p < n_phys; ++p) {
      if (g.degree(p) > g.degree(anchor_phys)) anchor_phys = p;
    }
    place(seed_a, anchor_phys);
    int partner_phys = -1;
    for (int p : g.neighbors(anchor_phys)) {
      if (partner_phys < 0 || g.degree(p) > g.degree(partner_phys)) {
        partner_phys = p;
      }
    }
    if (partner_phys < 0) {
      // isolated anchor; fall back to the smallest free vertex
      for (int p = 0; p < n_phys; ++p) {
        if (!phys_used[static_cast<std::size_t>(p)]) {
          partner_phys = p;
          break;
        }
      }
    }
    place(seed_b, partner_phys);

    // grow outwards, strongest attachment first
    for (;;) {
      int next = -1;
      double next_attach = 0.0;
      for (int l = 0; l < n_log; ++l) {
        if (placed[static_cast<std::size_t>(l)]) continue;
        double attach = 0.0;
        for (int p = 0; p < n_log; ++p) {
          if (placed[static_cast<std::size_t>(p)]) {
            attach += w[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)];
          }
        }
        if (attach > next_attach ||
            (attach == next_attach && attach > 0.0 && next >= 0 &&
             wdeg[static_cast<std::size_t>(l)] >
                 wdeg[static_cast<std::size_t>(next)])) {
          next = l;
          next_attach = attach;
        }
      }
      if (next < 0 || next_attach <= 0.0) break;

      // candidate positions: free neighbors of the mapped region,
      // falling back to every free vertex if the region is walled in
      std::vector<int> candidates;
      for (int p = 0; p < n_phys; ++p) {
        if (phys_used[static_cast<std::size_t>(p)]) continue;
        for (int nb : g.neighbors(p)) {
          if (phys_used[static_cast<std::size_t>(nb)]) {
            candidates.push_back(p);
            break;
          }
        }
      }
      if (candidates.empty()) {
        for (int p = 0; p < n_phys; ++p) {
          if (!phys_used[static_cast<std::size_t>(p)]) candidates.push_back(p);
        }
      }

      int best_p = -1;
      double best_score = std::numeric_limits<double>::infinity();
      for (int p : candidates) {
        double score = 0.0;
        for (int l = 0; l < n_log; ++l) {
          if (!placed[static_cast<std::size_t>(l)]) continue;
          const double lw =
              w[static_cast<std::size_t>(next)][static_cast<std::size_t>(l)];
          if (lw > 0.0) {
            score += lw * dist(p, log_to_phys[static_cast<std::size_t>(l)]);
          }
        }
        if (score < best_score ||
            (score == best_score && best_p >= 0 &&
             g.degree(p) > g.degree(best_p))) {
          best_score = score;
          best_p = p;
        }
      }
      place(next, best_p);
    }
  }

  // everything still unplaced fills ascending
  int cursor = 0;
  auto next_free = [&]() {
    while (phys_used[static_cast<std::size_t>(cursor)]) ++cursor;
    return cursor;
  };
  for (int l = 0; l < n_log; ++l) {
    if (!placed[static_cast<std::size_t>(l)]) place(l, next_free());
  }
  for (int l = n_log; l < n_phys; ++l) {
    const int p = next_free();
    log_to_phys[static_cast<std::size_t>(l)] = p;
    phys_used[static_cast<std::size_t>(p)] = true;
  }

  return make_layout(std::move(log_to_phys));
}

}  // namespace trios
