// Device coupling graphs and the deterministic path queries the
// routers are built on.  All tie-breaking is lexicographic so that
// compilation output is reproducible run to run.

#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trios {

struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CouplingGraph {
 public:
  CouplingGraph() = default;
  explicit CouplingGraph(int n_qubits, std::string name = "");

  int n_qubits() const { return n_; }
  const std::string& name() const { return name_; }

  // Undirected; duplicate edges and self-loops are rejected.
  void add_edge(int u, int v, double weight = 1.0);

  bool has_edge(int u, int v) const;
  double edge_weight(int u, int v) const;
  void set_all_weights(double w);

  // Neighbor lists are kept sorted ascending.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  int edge_count() const { return edge_count_; }

  // Edge list with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int edge_count_ = 0;
  std::string name_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<double>> weight_;
};

// The 20-qubit device used for the noise studies: a 4x5 lattice with
// rings joined through shared corners.
CouplingGraph johannesburg_topology();

CouplingGraph grid_topology(int rows, int cols);
CouplingGraph line_topology(int n_qubits);

// `groups` fully connected groups of `size` qubits; the first qubit of
// each group is its hub and the hubs are pairwise connected.
CouplingGraph clusters_topology(int groups, int size);

// One "u v [weight]" edge per line; blank lines and lines starting
// with '#' are skipped.  Vertex count is max index + 1.
CouplingGraph topology_from_edge_list(std::istream& in,
                                      std::string name = "custom");

// Resolves the four standard device names: johannesburg, grid-5x4,
// line-20, clusters-5x4.  Throws TopologyError for anything else.
CouplingGraph topology_by_name(const std::string& name);
const std::vector<std::string>& standard_topology_names();

// Hop-count distances from `src` to every vertex (-1 if unreachable).
std::vector<int> distances_from(const CouplingGraph& g, int src);
int distance(const CouplingGraph& g, int a, int b);

// Weighted distances from `src` (Dijkstra over edge weights).
std::vector<double> weighted_distances_from(const CouplingGraph& g, int src);

// Deterministic shortest path from a to b, inclusive of endpoints: the
// lexicographically smallest among all shortest paths.  With
// `weighted` the path minimizes total edge weight instead of hops.
std::vector<int> shortest_path(const CouplingGraph& g, int a, int b,
                               bool weighted = false);

struct TrioCost {
  int destination;  // trio member the other two are routed towards
  double cost;      // sum of the two shortest-path distances
};

// Picks the trio member minimizing the distance sum to the other two
// (ties by smallest member value).
TrioCost trio_cost(const CouplingGraph& g, int a, int b, int c,
                   bool weighted = false);

}  // namespace trios
