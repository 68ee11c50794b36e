#include "trios/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace trios {

CouplingGraph::CouplingGraph(int n_qubits, std::string name)
    : n_(n_qubits), name_(std::move(name)) {
  if (n_qubits < 0) throw TopologyError("qubit count must be non-negative");
  adj_.resize(static_cast<std::size_t>(n_qubits));
  weight_.resize(static_cast<std::size_t>(n_qubits));
}

void CouplingGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw TopologyError("vertex " + std::to_string(v) +
                        " out of range for " + std::to_string(n_) +
                        " qubits");
  }
}

void CouplingGraph::add_edge(int u, int v, double weight) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw TopologyError("self-loops are not allowed");
  if (has_edge(u, v)) {
    throw TopologyError("duplicate edge " + std::to_string(u) + "-" +
                        std::to_string(v));
  }
  if (!(weight > 0.0)) throw TopologyError("edge weight must be positive");
  auto insert = [&](int a, int b) {
    auto& nbrs = adj_[static_cast<std::size_t>(a)];
    auto& ws = weight_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
    ws.insert(ws.begin() + (it - nbrs.begin()), weight);
    nbrs.insert(it, b);
  };
  insert(u, v);
  insert(v, u);
  ++edge_count_;
}

bool CouplingGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

double CouplingGraph::edge_weight(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) {
    throw TopologyError("no edge " + std::to_string(u) + "-" +
                        std::to_string(v));
  }
  return weight_[static_cast<std::size_t>(u)][static_cast<std::size_t>(
      it - nbrs.begin())];
}

void CouplingGraph::set_all_weights(double w) {
  if (!(w > 0.0)) throw TopologyError("edge weight must be positive");
  for (auto& ws : weight_) std::fill(ws.begin(), ws.end(), w);
}

const std::vector<int>& CouplingGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int CouplingGraph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

std::vector<std::pair<int, int>> CouplingGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

CouplingGraph johannesburg_topology() {
  CouplingGraph g(20, "johannesburg");
  const std::pair<int, int> edges[] = {
      {0, 1},   {1, 2},   {2, 3},   {3, 4},   {0, 5},   {4, 9},
      {5, 6},   {6, 7},   {7, 8},   {8, 9},   {5, 10},  {9, 14},
      {7, 12},  {10, 11}, {11, 12}, {12, 13}, {13, 14}, {10, 15},
      {14, 19}, {15, 16}, {16, 17}, {17, 18}, {18, 19},
  };
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

CouplingGraph grid_topology(int rows, int cols) {
  if (rows < 1 || cols < 1) throw TopologyError("grid needs positive extents");
  CouplingGraph g(rows * cols,
                  "grid-" + std::to_string(cols) + "x" + std::to_string(rows));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

CouplingGraph line_topology(int n_qubits) {
  if (n_qubits < 1) throw TopologyError("line needs at least one qubit");
  CouplingGraph g(n_qubits, "line-" + std::to_string(n_qubits));
  for (int v = 0; v + 1 < n_qubits; ++v) g.add_edge(v, v + 1);
  return g;
}

CouplingGraph clusters_topology(int groups, int size) {
  if (groups < 1 || size < 1) {
    throw TopologyError("clusters need positive extents");
  }
  CouplingGraph g(groups * size, "clusters-" + std::to_string(size) + "x" +
                                    std::to_string(groups));
  for (int k = 0; k < groups; ++k) {
    const int base = k * size;
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) g.add_edge(base + i, base + j);
    }
  }
  // hubs are the first qubit of each group
  for (int a = 0; a < groups; ++a) {
    for (int b = a + 1; b < groups; ++b) g.add_edge(a * size, b * size);
  }
  return g;
}

CouplingGraph topology_from_edge_list(std::istream& in, std::string name) {
  struct Entry {
    int u, v;
    double w;
  };
  std::vector<Entry> entries;
  int max_vertex = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    Entry e{-1, -1, 1.0};
    if (!(ss >> e.u >> e.v)) {
      throw TopologyError("edge list line " + std::to_string(line_no) +
                          ": expected \"u v [weight]\"");
    }
    ss >> e.w;  // optional
    if (e.u < 0 || e.v < 0) {
      throw TopologyError("edge list line " + std::to_string(line_no) +
                          ": negative vertex index");
    }
    max_vertex = std::max({max_vertex, e.u, e.v});
    entries.push_back(e);
  }
  if (entries.empty()) throw TopologyError("edge list is empty");
  CouplingGraph g(max_vertex + 1, std::move(name));
  for (const Entry& e : entries) g.add_edge(e.u, e.v, e.w);
  return g;
}

CouplingGraph topology_by_name(const std::string& name) {
  if (name == "johannesburg") return johannesburg_topology();
  if (name == "grid-5x4") return grid_topology(4, 5);
  if (name == "line-20") return line_topology(20);
  if (name == "clusters-5x4") return clusters_topology(4, 5);
  throw TopologyError("unknown topology name: " + name);
}

const std::vector<std::string>& standard_topology_names() {
  static const std::vector<std::string> names = {"johannesburg", "grid-5x4",
                                                 "line-20", "clusters-5x4"};
  return names;
}

std::vector<int> distances_from(const CouplingGraph& g, int src) {
  std::vector<int> dist(static_cast<std::size_t>(g.n_qubits()), -1);
  std::queue<int> frontier;
  dist[static_cast<std::size_t>(src)] = 0;
  frontier.push(src);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

int distance(const CouplingGraph& g, int a, int b) {
  const int d = distances_from(g, a)[static_cast<std::size_t>(b)];
  if (d < 0) {
    throw TopologyError("no path between " + std::to_string(a) + " and " +
                        std::to_string(b));
  }
  return d;
}

std::vector<double> weighted_distances_from(const CouplingGraph& g, int src) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<std::size_t>(g.n_qubits()), inf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(src)] = 0.0;
  heap.emplace(0.0, src);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[static_cast<std::size_t>(v)]) continue;
    for (int w : g.neighbors(v)) {
      const double cand = d + g.edge_weight(v, w);
      if (cand < dist[static_cast<std::size_t>(w)]) {
        dist[static_cast<std::size_t>(w)] = cand;
        heap.emplace(cand, w);
      }
    }
  }
  return dist;
}

namespace {

// Walks from `a` towards `b`, always taking the smallest-index
// neighbor that stays on a shortest path.  This realizes the
// lexicographically smallest shortest path.
std::vector<int> lex_walk_hops(const CouplingGraph& g, int a, int b) {
  const std::vector<int> dist = distances_from(g, b);
  if (dist[static_cast<std::size_t>(a)] < 0) {
    throw TopologyError("no path between " + std::to_string(a) + " and " +
                        std::to_string(b));
  }
  std::vector<int> path{a};
  int cur = a;
  while (cur != b) {
    const int need = dist[static_cast<std::size_t>(cur)] - 1;
    for (int w : g.neighbors(cur)) {  // sorted, so first hit is smallest
      if (dist[static_cast<std::size_t>(w)] == need) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

std::vector<int> lex_walk_weighted(const CouplingGraph& g, int a, int b) {
  const std::vector<double> dist = weighted_distances_from(g, b);
  if (!std::isfinite(dist[static_cast<std::size_t>(a)])) {
    throw TopologyError("no path between " + std::to_string(a) + " and " +
                        std::to_string(b));
  }
  std::vector<int> path{a};
  int cur = a;
  while (cur != b) {
    const double here = dist[static_cast<std::size_t>(cur)];
    int next = -1;
    for (int w : g.neighbors(cur)) {
      const double via = g.edge_weight(cur, w) + dist[static_cast<std::size_t>(w)];
      const double tol = 1e-9 * std::max(1.0, std::abs(here));
      if (std::abs(via - here) <= tol &&
          dist[static_cast<std::size_t>(w)] < here) {
        next = w;
        break;
      }
    }
    if (next < 0) {
      // numeric guard: fall back to the strictly best neighbor
      double best = std::numeric_limits<double>::infinity();
      for (int w : g.neighbors(cur)) {
        const double via =
            g.edge_weight(cur, w) + dist[static_cast<std::size_t>(w)];
        if (via < best) {
          best = via;
          next = w;
        }
      }
    }
    cur = next;
    path.push_back(cur);
  }
  return path;
}

}  // namespace

std::vector<int> shortest_path(const CouplingGraph& g, int a, int b,
                               bool weighted) {
  if (a == b) return {a};
  return weighted ? lex_walk_weighted(g, a, b) : lex_walk_hops(g, a, b);
}

TrioCost trio_cost(const CouplingGraph& g, int a, int b, int c,
                   bool weighted) {
  const int members[3] = {a, b, c};
  TrioCost best{-1, std::numeric_limits<double>::infinity()};
  for (int m : members) {
    double sum = 0.0;
    if (weighted) {
      const std::vector<double> dist = weighted_distances_from(g, m);
      for (int other : members) {
        if (other != m) sum += dist[static_cast<std::size_t>(other)];
      }
    } else {
      const std::vector<int> dist = distances_from(g, m);
      for (int other : members) {
        if (other == m) continue;
        if (dist[static_cast<std::size_t>(other)] < 0) {
          throw TopologyError("trio members are not connected");
        }
        sum += dist[static_cast<std::size_t>(other)];
      }
    }
    if (sum < best.cost || (sum == best.cost && m < best.destination)) {
      best = {m, sum};
    }
  }
  if (!std::isfinite(best.cost)) {
    throw TopologyError("trio members are not connected");
  }
  return best;
}

}  // namespace trios
