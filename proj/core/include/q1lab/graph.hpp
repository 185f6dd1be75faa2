#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace q1lab {

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Adjacency is stored as one 64-bit neighbor mask per vertex, so every
/// neighborhood operation is a handful of word ops.  Instances are value
/// types: all graph operations return new graphs and never mutate their
/// inputs, which makes them safe to share across threads.
class Graph {
public:
  static constexpr int kMaxVertices = 64;

  /// Edgeless graph on n vertices (1 <= n <= 64).
  static Graph empty(int n);

  /// Builds a graph from an explicit edge list.  Duplicate edges collapse
  /// silently; self-loops and out-of-range endpoints are rejected.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

  /// Trusted constructor from prebuilt neighbor masks (symmetry and
  /// loop-freeness are asserted in debug builds only).
  static Graph from_adjacency(std::vector<std::uint64_t> adj);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  std::uint64_t neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
  int degree(int u) const;
  int max_degree() const;
  bool is_regular() const;

  /// Edges as (u,v) pairs with u < v, ascending lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

private:
  Graph(int n, std::vector<std::uint64_t> adj, int m) : n_(n), m_(m), adj_(std::move(adj)) {}

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Degree data used by the degree-based spectral bounds: the degree
/// sequence sorted descending, and per-vertex 2-average degrees
/// m_u = (sum of neighbor degrees) / d(u), absent for isolated vertices.
struct DegreeProfile {
  int n = 0;
  int m = 0;
  std::vector<int> degrees_desc;                   // d_1 >= d_2 >= ... >= d_n
  std::vector<int> degrees;                        // indexed by original vertex id
  std::vector<std::optional<double>> two_average;  // indexed by original vertex id
};

Graph complement(const Graph& g);

/// Disjoint union plus all cross edges; vertices of g keep their ids,
/// vertices of h are shifted by g.vertex_count().
Graph join(const Graph& g, const Graph& h);

/// Disjoint union, same vertex numbering convention as join().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Deletes u's incident edges and connects u to v's neighbors instead;
/// afterwards u and v have identical neighborhoods.
Graph duplicate_vertex(const Graph& g, int u, int v);

/// Induced subgraph on the vertices of `mask`, renumbered 0.. in
/// ascending original-id order.
Graph induced_subgraph(const Graph& g, std::uint64_t mask);

/// Exact clique number via branch-and-bound with greedy-coloring pruning.
/// Deterministic: candidate order is ascending vertex id.
int clique_number(const Graph& g);

/// Exact chromatic number; capped at n <= 16 (throws beyond the cap).
int chromatic_number(const Graph& g);

bool is_connected(const Graph& g);

DegreeProfile degree_profile(const Graph& g);

// Upper-triangle edge bitmask helpers.  Edge (i,j), i<j, occupies bit
// j(j-1)/2 + i, so bits run (0,1),(0,2),(1,2),(0,3),...  Requires
// n(n-1)/2 <= 64, i.e. n <= 11.
int edge_bit_index(int i, int j);
std::uint64_t to_edge_mask(const Graph& g);
Graph from_edge_mask(int n, std::uint64_t mask);

}  // namespace q1lab
