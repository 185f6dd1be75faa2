#include "q1lab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace q1lab {

namespace {

void check_vertex_count(int n) {
  if (n < 1 || n > Graph::kMaxVertices)
    throw std::invalid_argument("vertex count must be in [1, 64], got " + std::to_string(n));
}

int popcount(std::uint64_t x) { return std::popcount(x); }

}  // namespace

Graph Graph::empty(int n) {
  check_vertex_count(n);
  return Graph(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0), 0);
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  check_vertex_count(n);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v)
      throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
    adj[static_cast<std::size_t>(u)] |= 1ull << v;
    adj[static_cast<std::size_t>(v)] |= 1ull << u;
  }
  int m = 0;
  for (auto row : adj) m += popcount(row);
  return Graph(n, std::move(adj), m / 2);
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> adj) {
  const int n = static_cast<int>(adj.size());
  check_vertex_count(n);
  int deg_sum = 0;
  for (int u = 0; u < n; ++u) {
    assert((adj[static_cast<std::size_t>(u)] >> u & 1u) == 0 && "self-loop");
    assert((n == 64 || (adj[static_cast<std::size_t>(u)] >> n) == 0) &&
           "neighbor id out of range");
    deg_sum += popcount(adj[static_cast<std::size_t>(u)]);
  }
#ifndef NDEBUG
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      assert(((adj[static_cast<std::size_t>(u)] >> v) & 1u) ==
                 ((adj[static_cast<std::size_t>(v)] >> u) & 1u) &&
             "adjacency must be symmetric");
#endif
  return Graph(n, std::move(adj), deg_sum / 2);
}

int Graph::degree(int u) const { return popcount(adj_[static_cast<std::size_t>(u)]); }

int Graph::max_degree() const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d = std::max(d, degree(u));
  return d;
}

bool Graph::is_regular() const {
  const int d = degree(0);
  for (int u = 1; u < n_; ++u)
    if (degree(u) != d) return false;
  return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u + 1 < n_; ++u) {
    std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
    while (higher) {
      const int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    adj[static_cast<std::size_t>(u)] = (~g.neighbors(u) & all) & ~(1ull << u);
  return Graph::from_adjacency(std::move(adj));
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  if (ng + nh > Graph::kMaxVertices)
    throw std::invalid_argument("join exceeds the 64-vertex envelope");
  const std::uint64_t g_mask = (ng == 64 ? ~0ull : (1ull << ng) - 1);
  const std::uint64_t h_mask = ((ng + nh == 64 ? ~0ull : (1ull << (ng + nh)) - 1)) & ~g_mask;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(ng + nh));
  for (int u = 0; u < ng; ++u) adj[static_cast<std::size_t>(u)] = g.neighbors(u) | h_mask;
  for (int v = 0; v < nh; ++v)
    adj[static_cast<std::size_t>(ng + v)] = (h.neighbors(v) << ng) | g_mask;
  return Graph::from_adjacency(std::move(adj));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  if (ng + nh > Graph::kMaxVertices)
    throw std::invalid_argument("union exceeds the 64-vertex envelope");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(ng + nh));
  for (int u = 0; u < ng; ++u) adj[static_cast<std::size_t>(u)] = g.neighbors(u);
  for (int v = 0; v < nh; ++v) adj[static_cast<std::size_t>(ng + v)] = h.neighbors(v) << ng;
  return Graph::from_adjacency(std::move(adj));
}

Graph duplicate_vertex(const Graph& g, int u, int v) {
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
  if (u == v) throw std::invalid_argument("cannot duplicate a vertex to itself");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  const std::uint64_t new_nu = g.neighbors(v) & ~(1ull << u);
  for (int w = 0; w < n; ++w) {
    if (w == u) {
      adj[static_cast<std::size_t>(w)] = new_nu;
    } else {
      std::uint64_t row = g.neighbors(w) & ~(1ull << u);
      if ((new_nu >> w) & 1u) row |= 1ull << u;
      adj[static_cast<std::size_t>(w)] = row;
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
  std::vector<int> keep;
  std::uint64_t bits = mask;
  while (bits) {
    keep.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }
  if (keep.empty()) throw std::invalid_argument("induced subgraph needs at least one vertex");
  const int k = static_cast<int>(keep.size());
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.has_edge(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)])) {
        adj[static_cast<std::size_t>(a)] |= 1ull << b;
        adj[static_cast<std::size_t>(b)] |= 1ull << a;
      }
  return Graph::from_adjacency(std::move(adj));
}

namespace {

// Tomita-style expansion: candidates are greedily colored (ascending id
// within each color class) and explored highest color first, pruning
// branches whose color bound cannot beat the incumbent.
class CliqueSolver {
public:
  explicit CliqueSolver(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  int solve() {
    best_ = 0;
    const std::uint64_t all = n_ == 64 ? ~0ull : (1ull << n_) - 1;
    expand(all, 0);
    return best_;
  }

private:
  void expand(std::uint64_t cand, int size) {
    if (!cand) {
      best_ = std::max(best_, size);
      return;
    }
    // Greedy coloring of the candidate set; order[] ends up sorted by
    // color, so iterating it backwards visits the highest bound first.
    int order[Graph::kMaxVertices];
    int bound[Graph::kMaxVertices];
    int cnt = 0;
    std::uint64_t uncolored = cand;
    int color = 0;
    while (uncolored) {
      ++color;
      std::uint64_t classable = uncolored;
      while (classable) {
        const int v = std::countr_zero(classable);
        order[cnt] = v;
        bound[cnt] = color;
        ++cnt;
        uncolored &= ~(1ull << v);
        classable &= ~(1ull << v);
        classable &= ~g_.neighbors(v);
      }
    }
    for (int i = cnt - 1; i >= 0; --i) {
      if (size + bound[i] <= best_) return;
      const int v = order[i];
      expand(cand & g_.neighbors(v), size + 1);
      cand &= ~(1ull << v);
    }
  }

  const Graph& g_;
  int n_;
  int best_ = 0;
};

// Backtracking k-colorability with most-constrained-vertex selection.
class ColorSolver {
public:
  ColorSolver(const Graph& g, int k) : g_(g), n_(g.vertex_count()), k_(k) {
    used_.assign(static_cast<std::size_t>(n_), 0);
  }

  bool solve() { return assign(0); }

private:
  bool assign(int colored) {
    if (colored == n_) return true;
    // Pick the uncolored vertex with the fewest remaining colors.
    int pick = -1, pick_avail = k_ + 1;
    for (int v = 0; v < n_; ++v) {
      if (colored_mask_ >> v & 1u) continue;
      const int avail = k_ - std::popcount(used_[static_cast<std::size_t>(v)]);
      if (avail < pick_avail) {
        pick = v;
        pick_avail = avail;
        if (avail == 0) return false;
      }
    }
    // Break color symmetry: a vertex may use at most one fresh color.
    const std::uint64_t tried = used_[static_cast<std::size_t>(pick)];
    int max_color = std::min(k_ - 1, highest_used_ + 1);
    for (int c = 0; c <= max_color; ++c) {
      if (tried >> c & 1u) continue;
      const int prev_highest = highest_used_;
      highest_used_ = std::max(highest_used_, c);
      colored_mask_ |= 1ull << pick;
      std::uint64_t nb = g_.neighbors(pick);
      while (nb) {
        const int w = std::countr_zero(nb);
        nb &= nb - 1;
        saved_.push_back({w, used_[static_cast<std::size_t>(w)]});
        used_[static_cast<std::size_t>(w)] |= 1ull << c;
      }
      const std::size_t mark = saved_.size() - static_cast<std::size_t>(g_.degree(pick));
      if (assign(colored + 1)) return true;
      while (saved_.size() > mark) {
        used_[static_cast<std::size_t>(saved_.back().first)] = saved_.back().second;
        saved_.pop_back();
      }
      colored_mask_ &= ~(1ull << pick);
      highest_used_ = prev_highest;
      if (c > prev_highest) break;  // trying a second fresh color is symmetric
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  std::vector<std::uint64_t> used_;  // per-vertex mask of colors taken by neighbors
  std::vector<std::pair<int, std::uint64_t>> saved_;
  std::uint64_t colored_mask_ = 0;
  int highest_used_ = -1;
};

int greedy_coloring_upper_bound(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> by_degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_degree[static_cast<std::size_t>(v)] = v;
  std::sort(by_degree.begin(), by_degree.end(),
            [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  int used = 0;
  for (int v : by_degree) {
    std::uint64_t taken = 0;
    std::uint64_t nb = g.neighbors(v);
    while (nb) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (color[static_cast<std::size_t>(w)] >= 0) taken |= 1ull << color[static_cast<std::size_t>(w)];
    }
    const int c = std::countr_one(taken);
    color[static_cast<std::size_t>(v)] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace

int clique_number(const Graph& g) { return CliqueSolver(g).solve(); }

int chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16)
    throw std::invalid_argument("chromatic_number is exact only up to 16 vertices, got n=" +
                                std::to_string(n));
  if (g.edge_count() == 0) return 1;
  const int lo = clique_number(g);
  const int hi = greedy_coloring_upper_bound(g);
  for (int k = lo; k < hi; ++k)
    if (ColorSolver(g, k).solve()) return k;
  return hi;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return popcount(seen) == n;
}

DegreeProfile degree_profile(const Graph& g) {
  const int n = g.vertex_count();
  DegreeProfile p;
  p.n = n;
  p.m = g.edge_count();
  p.degrees_desc.reserve(static_cast<std::size_t>(n));
  p.degrees.reserve(static_cast<std::size_t>(n));
  p.two_average.resize(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    const int d = g.degree(u);
    p.degrees_desc.push_back(d);
    p.degrees.push_back(d);
    if (d == 0) continue;
    long long sum = 0;
    std::uint64_t nb = g.neighbors(u);
    while (nb) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      sum += g.degree(w);
    }
    p.two_average[static_cast<std::size_t>(u)] = static_cast<double>(sum) / d;
  }
  std::sort(p.degrees_desc.begin(), p.degrees_desc.end(), std::greater<>());
  return p;
}

int edge_bit_index(int i, int j) {
  assert(i < j);
  return j * (j - 1) / 2 + i;
}

std::uint64_t to_edge_mask(const Graph& g) {
  const int n = g.vertex_count();
  if (n * (n - 1) / 2 > 64) throw std::invalid_argument("edge mask requires n <= 11");
  std::uint64_t mask = 0;
  for (auto [u, v] : g.edges()) mask |= 1ull << edge_bit_index(u, v);
  return mask;
}

Graph from_edge_mask(int n, std::uint64_t mask) {
  check_vertex_count(n);
  if (n * (n - 1) / 2 > 64) throw std::invalid_argument("edge mask requires n <= 11");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1u) {
        adj[static_cast<std::size_t>(i)] |= 1ull << j;
        adj[static_cast<std::size_t>(j)] |= 1ull << i;
      }
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace q1lab
