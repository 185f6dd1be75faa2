#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "q1lab/graph.hpp"

namespace q1lab {

/// Balanced complete t-partite graph: parts of size k+1 (r of them) and k,
/// where n = kt + r.  Larger parts come first and vertices are numbered
/// contiguously by part, so the layout is canonical for golden tests.
Graph turan(int n, int t);
std::vector<int> turan_part_sizes(int n, int t);

Graph complete_multipartite(std::span<const int> sizes);
Graph complete_multipartite(std::initializer_list<int> sizes);

/// Complete graph K_w with a path on n-w vertices attached to one clique
/// vertex by a bridge; kite(n,2) degenerates to the path P_n.
Graph kite(int n, int w);

Graph path(int n);
Graph complete(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int p, int q);

/// Complement of a perfect matching on n (even) vertices: the
/// (n-2)-regular graph with clique number n/2.
Graph complement_perfect_matching(int n);

/// Odd-n companion of complement_perfect_matching: the complement of
/// (perfect matching on n-3 vertices plus a triangle), which is the
/// complete multipartite graph with parts (2,...,2,3).
Graph cpm_plus_triangle(int n);

enum class FamilyKind {
  turan,
  complete_multipartite,
  kite,
  path,
  complete_bipartite,
  complete,
  empty_graph,
  complement_perfect_matching,
  cpm_plus_triangle,
};

/// Parsed family descriptor, e.g. "turan:10,3" or "multipartite:4,3,3".
struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;

  static FamilySpec parse(std::string_view text);

  Graph build() const;
  std::string name() const;

  /// Clique and chromatic numbers where they are known analytically,
  /// so callers can skip the exact solvers beyond their size caps.
  std::optional<int> known_clique() const;
  std::optional<int> known_chromatic() const;
};

}  // namespace q1lab
