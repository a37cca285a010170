#include "thetakit/spin.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thetakit {

namespace {

int count_components(int n, const std::vector<std::pair<int, int>>& edges, const EdgeSubset& subset) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int components = n;
  for (int e : subset) {
    const int a = find(edges[e].first), b = find(edges[e].second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

EdgeSubset all_edges(const DualGraph& g) {
  EdgeSubset all(g.num_edges());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

std::uint64_t pow2(int e) {
  if (e < 0 || e > 63) throw std::overflow_error("count exceeds 2^63");
  return std::uint64_t{1} << e;
}

void check_subset(const DualGraph& g, const EdgeSubset& delta) {
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] < 0 || delta[i] >= g.num_edges()) throw std::invalid_argument("edge index out of range");
    if (i > 0 && delta[i] <= delta[i - 1]) throw std::invalid_argument("edge subset must be sorted and distinct");
  }
}

}  // namespace

DualGraph::DualGraph(std::vector<int> genera, std::vector<std::pair<int, int>> edges)
    : genera_(std::move(genera)), edges_(std::move(edges)) {
  for (int g : genera_)
    if (g < 0) throw std::invalid_argument("negative vertex genus");
  for (auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices())
      throw std::invalid_argument("edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
}

DualGraph DualGraph::irreducible(int geometric_genus, int nodes) {
  if (nodes < 0) throw std::invalid_argument("negative node count");
  return DualGraph({geometric_genus}, std::vector<std::pair<int, int>>(nodes, {0, 0}));
}

int DualGraph::geometric_genus_sum() const { return std::accumulate(genera_.begin(), genera_.end(), 0); }

int DualGraph::arithmetic_genus() const { return geometric_genus_sum() + betti(*this); }

void DualGraph::validate() const {
  if (genera_.empty()) throw std::invalid_argument("graph has no vertices");
  if (count_components(num_vertices(), edges_, all_edges(*this)) != 1)
    throw std::invalid_argument("graph is not connected");
  std::vector<int> incidences(genera_.size(), 0);
  for (auto [a, b] : edges_) {
    ++incidences[a];
    ++incidences[b];
  }
  for (int v = 0; v < num_vertices(); ++v)
    if (genera_[v] == 0 && incidences[v] < 3)
      throw std::invalid_argument("vertex " + std::to_string(v) + " is rational with fewer than 3 nodes (unstable)");
  if (arithmetic_genus() < 2) throw std::invalid_argument("arithmetic genus is below 2");
}

int betti(const DualGraph& graph) { return betti(graph, all_edges(graph)); }

int betti(const DualGraph& graph, const EdgeSubset& delta) {
  check_subset(graph, delta);
  return static_cast<int>(delta.size()) - graph.num_vertices() +
         count_components(graph.num_vertices(), graph.edges(), delta);
}

bool is_even_subset(const DualGraph& graph, const EdgeSubset& delta) {
  check_subset(graph, delta);
  std::vector<int> deg(graph.num_vertices(), 0);
  for (int e : delta) {
    ++deg[graph.edges()[e].first];
    ++deg[graph.edges()[e].second];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

std::vector<EdgeSubset> even_subsets(const DualGraph& graph) {
  const int nv = graph.num_vertices(), ne = graph.num_edges();
  // Incidence matrix over F_2; a loop's column is zero.
  std::vector<std::vector<char>> a(nv, std::vector<char>(ne, 0));
  for (int e = 0; e < ne; ++e) {
    const auto [u, v] = graph.edges()[e];
    if (u != v) a[u][e] = a[v][e] = 1;
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < ne && row < nv; ++c) {
    int p = row;
    while (p < nv && !a[p][c]) ++p;
    if (p == nv) continue;
    std::swap(a[p], a[row]);
    for (int r = 0; r < nv; ++r)
      if (r != row && a[r][c])
        for (int j = 0; j < ne; ++j) a[r][j] ^= a[row][j];
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<char> is_pivot(ne, 0);
  for (int c : pivot_col) is_pivot[c] = 1;

  std::vector<std::vector<char>> basis;
  for (int f = 0; f < ne; ++f) {
    if (is_pivot[f]) continue;
    std::vector<char> x(ne, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = a[r][f];
    basis.push_back(std::move(x));
  }
  if (basis.size() > 30) throw std::invalid_argument("too many even subsets to list");

  std::vector<EdgeSubset> out;
  out.reserve(std::size_t{1} << basis.size());
  std::vector<char> cur(ne, 0);
  // Gray-code walk through the kernel.
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << basis.size()); ++i) {
    if (i > 0) {
      const auto& b = basis[std::countr_zero(i)];
      for (int j = 0; j < ne; ++j) cur[j] ^= b[j];
    }
    EdgeSubset s;
    for (int j = 0; j < ne; ++j)
      if (cur[j]) s.push_back(j);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSubset> even_subsets_scan(const DualGraph& graph, Exec exec) {
  const int nv = graph.num_vertices(), ne = graph.num_edges();
  if (ne > 30) throw std::invalid_argument("scan limited to 30 edges");
  std::vector<std::uint32_t> incident(nv, 0);
  for (int e = 0; e < ne; ++e) {
    const auto [u, v] = graph.edges()[e];
    if (u != v) {
      incident[u] |= 1u << e;
      incident[v] |= 1u << e;
    }
  }
  const std::int64_t total = std::int64_t{1} << ne;
  auto even = [&](std::uint32_t m) {
    for (auto inc : incident)
      if (std::popcount(m & inc) % 2) return false;
    return true;
  };
  std::vector<std::uint32_t> masks;
  if (exec == Exec::serial) {
    for (std::int64_t m = 0; m < total; ++m)
      if (even(static_cast<std::uint32_t>(m))) masks.push_back(static_cast<std::uint32_t>(m));
  } else {
#pragma omp parallel
    {
      std::vector<std::uint32_t> local;
#pragma omp for schedule(static) nowait
      for (std::int64_t m = 0; m < total; ++m)
        if (even(static_cast<std::uint32_t>(m))) local.push_back(static_cast<std::uint32_t>(m));
#pragma omp critical
      masks.insert(masks.end(), local.begin(), local.end());
    }
  }
  std::vector<EdgeSubset> out;
  out.reserve(masks.size());
  for (auto m : masks) {
    EdgeSubset s;
    for (int j = 0; j < ne; ++j)
      if (m >> j & 1u) s.push_back(j);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpinSupport spin_counts(const DualGraph& graph, const EdgeSubset& delta) {
  if (!is_even_subset(graph, delta)) throw std::invalid_argument("edge subset " + format_edge_subset(delta) + " is not even");
  const int b_delta = betti(graph, delta);
  return {delta, pow2(2 * graph.geometric_genus_sum() + b_delta), pow2(betti(graph) - b_delta)};
}

ParitySplit spin_parity_irreducible(const DualGraph& graph, const EdgeSubset& delta) {
  if (graph.num_vertices() != 1) throw std::invalid_argument("parity is only implemented for irreducible curves");
  const SpinSupport s = spin_counts(graph, delta);
  // Resolving every node leaves the normalization itself; otherwise the
  // structures split evenly.
  if (delta.empty()) {
    const auto [minus, plus] = theta_counts(graph.genera().front());
    return {minus, plus};
  }
  return {s.count / 2, s.count / 2};
}

std::pair<std::uint64_t, std::uint64_t> theta_counts(int g) {
  if (g < 0) throw std::invalid_argument("negative genus");
  if (g > 31) throw std::overflow_error("genus too large");
  const std::uint64_t p = pow2(g);
  return {p * (p - 1) / 2, p * (p + 1) / 2};
}

std::vector<SpinTableRow> spin_table_irreducible(int g, int n) {
  if (g < 0 || n < 0 || n > g) throw std::invalid_argument("need 0 <= nodes <= genus");
  std::vector<SpinTableRow> rows;
  std::uint64_t binom = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * static_cast<std::uint64_t>(n - k + 1) / static_cast<std::uint64_t>(k);
    SpinTableRow r;
    r.k = k;
    r.count = binom * pow2(2 * g - n - k);
    r.multiplicity = pow2(k);
    if (k < n) {
      r.odd = r.even = r.count / 2;
    } else {
      const auto [minus, plus] = theta_counts(g - n);
      r.odd = minus;
      r.even = plus;
    }
    rows.push_back(r);
  }
  return rows;
}

DualGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> genera;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&] { throw std::invalid_argument("graph line " + std::to_string(lineno) + ": cannot parse '" + line + "'"); };
    if (tag == "v") {
      int g;
      if (!(ls >> g)) fail();
      genera.push_back(g);
    } else if (tag == "e") {
      int a, b;
      if (!(ls >> a >> b)) fail();
      edges.emplace_back(a, b);
    } else {
      fail();
    }
    std::string extra;
    if (ls >> extra) fail();
  }
  return DualGraph(std::move(genera), std::move(edges));
}

std::string format_edge_subset(const EdgeSubset& delta) {
  std::string out = "{";
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(delta[i]);
  }
  return out + "}";
}

}  // namespace thetakit
