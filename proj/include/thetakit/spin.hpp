#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thetakit/exec.hpp"

namespace thetakit {

/// Sorted list of edge indices.
using EdgeSubset = std::vector<int>;

/// Dual graph of a nodal curve: one vertex per component (weighted by its
/// geometric genus), one edge per node. Loops are edges (v, v).
class DualGraph {
 public:
  DualGraph() = default;
  DualGraph(std::vector<int> genera, std::vector<std::pair<int, int>> edges);

  /// Irreducible curve of geometric genus g with n nodes.
  static DualGraph irreducible(int geometric_genus, int nodes);

  int num_vertices() const { return static_cast<int>(genera_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& genera() const { return genera_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int geometric_genus_sum() const;
  int arithmetic_genus() const;

  /// Throws std::invalid_argument unless the graph is connected, stable
  /// (genus-0 vertices carry >= 3 incidences, loops counted twice) and of
  /// arithmetic genus >= 2.
  void validate() const;

 private:
  std::vector<int> genera_;
  std::vector<std::pair<int, int>> edges_;
};

/// First Betti number of the graph.
int betti(const DualGraph& graph);

/// First Betti number of the spanning subgraph with edge set `delta`.
int betti(const DualGraph& graph, const EdgeSubset& delta);

/// Every vertex meets `delta` an even number of times (loops contribute 2).
bool is_even_subset(const DualGraph& graph, const EdgeSubset& delta);

/// All even subsets, as the kernel of the incidence matrix over F_2.
/// Sorted lexicographically; there are 2^b1 of them.
std::vector<EdgeSubset> even_subsets(const DualGraph& graph);

/// Same set by scanning all 2^E edge subsets (E <= 30).
std::vector<EdgeSubset> even_subsets_scan(const DualGraph& graph, Exec exec = Exec::parallel);

struct SpinSupport {
  EdgeSubset delta;
  std::uint64_t count = 0;
  std::uint64_t multiplicity = 1;
};

/// Spin structures supported on the even subset `delta`:
/// count 2^(2 sum g_v + b1(delta)), multiplicity 2^(b1 - b1(delta)).
SpinSupport spin_counts(const DualGraph& graph, const EdgeSubset& delta);

struct ParitySplit {
  std::uint64_t odd = 0;
  std::uint64_t even = 0;
};

/// Odd/even split of the structures supported on `delta` for a one-vertex
/// graph. Throws for reducible graphs, where no rule is implemented.
ParitySplit spin_parity_irreducible(const DualGraph& graph, const EdgeSubset& delta);

/// (N-, N+) = (2^(g-1)(2^g - 1), 2^(g-1)(2^g + 1)).
std::pair<std::uint64_t, std::uint64_t> theta_counts(int g);

struct SpinTableRow {
  int k = 0;  // number of resolved nodes
  std::uint64_t count = 0;
  std::uint64_t multiplicity = 1;
  std::uint64_t odd = 0;
  std::uint64_t even = 0;
};

/// Points of multiplicity 2^k on the spin moduli of an irreducible curve of
/// arithmetic genus g with n nodes, k = 0..n.
std::vector<SpinTableRow> spin_table_irreducible(int g, int n);

/// Parses `v <genus>` / `e <i> <j>` lines (0-based vertex indices, `#`
/// comments). Does not validate stability.
DualGraph parse_graph(std::string_view text);

std::string format_edge_subset(const EdgeSubset& delta);  // "{0,2}"

}  // namespace thetakit
