#include "q1lab/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "q1lab/families.hpp"

namespace q1lab {

namespace {

constexpr double kOffDiagonalTol = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double x = a[static_cast<std::size_t>(i) * n + j];
      sum += 2 * x * x;
    }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> signless_laplacian(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<double> q(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    q[static_cast<std::size_t>(i) * n + i] = g.degree(i);
    std::uint64_t nb = g.neighbors(i);
    while (nb) {
      const int j = std::countr_zero(nb);
      nb &= nb - 1;
      q[static_cast<std::size_t>(i) * n + j] = 1.0;
    }
  }
  return q;
}

EigenSystem jacobi_eigensystem(std::vector<double> a, int n) {
  assert(static_cast<int>(a.size()) == n * n);
  EigenSystem out;
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  int sweeps = 0;
  while (off_diagonal_norm(a, n) >= kOffDiagonalTol) {
    if (sweeps++ >= kMaxSweeps)
      throw std::runtime_error("jacobi_eigensystem: no convergence after 100 sweeps");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        // smaller-angle root of t^2 + 2*theta*t - 1 = 0
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[static_cast<std::size_t>(k) * n + p];
          const double vkq = v[static_cast<std::size_t>(k) * n + q];
          v[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
          v[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return at(x, x) < at(y, y); });

  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    const int col = order[static_cast<std::size_t>(k)];
    out.values[static_cast<std::size_t>(k)] = at(col, col);
    for (int i = 0; i < n; ++i)
      out.vectors[static_cast<std::size_t>(k) * n + i] = v[static_cast<std::size_t>(i) * n + col];
  }
  out.sweeps = sweeps;
  return out;
}

SpectralSummary spectral_summary(const Graph& g) {
  const int n = g.vertex_count();
  const auto q = signless_laplacian(g);
  auto eig = jacobi_eigensystem(q, n);

  SpectralSummary s;
  s.q1 = eig.values.back();
  s.q_min = eig.values.front();
  s.iterations = eig.sweeps;
  s.perron.assign(eig.vectors.end() - n, eig.vectors.end());

  // Sign convention: the largest-magnitude entry is positive; for a
  // connected graph the whole vector is then (numerically) nonnegative.
  double extreme = 0;
  for (double x : s.perron)
    if (std::abs(x) > std::abs(extreme)) extreme = x;
  if (extreme < 0)
    for (double& x : s.perron) x = -x;
  double norm = 0;
  for (double x : s.perron) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : s.perron) x /= norm;
  if (is_connected(g) && g.edge_count() > 0) {
    for (double& x : s.perron) {
      assert(x > -1e-10 && "Perron entry of a connected graph must be nonnegative");
      if (x < 0) x = 0;
    }
  }

  double residual = 0;
  for (int i = 0; i < n; ++i) {
    double row = g.degree(i) * s.perron[static_cast<std::size_t>(i)];
    std::uint64_t nb = g.neighbors(i);
    while (nb) {
      const int j = std::countr_zero(nb);
      nb &= nb - 1;
      row += s.perron[static_cast<std::size_t>(j)];
    }
    residual = std::max(residual, std::abs(row - s.q1 * s.perron[static_cast<std::size_t>(i)]));
  }
  s.residual = residual;
  return s;
}

double q1(const Graph& g) { return spectral_summary(g).q1; }

double q_min(const Graph& g) { return spectral_summary(g).q_min; }

std::vector<double> vertex_weights(const Graph& g, std::span<const double> f) {
  const int n = g.vertex_count();
  if (static_cast<int>(f.size()) != n)
    throw std::invalid_argument("vertex_weights: vector length does not match vertex count");
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  for (int u = 0; u < n; ++u) {
    std::uint64_t nb = g.neighbors(u);
    double sum = 0;
    while (nb) {
      const int v = std::countr_zero(nb);
      nb &= nb - 1;
      sum += f[static_cast<std::size_t>(u)] + f[static_cast<std::size_t>(v)];
    }
    w[static_cast<std::size_t>(u)] = sum;
  }
  return w;
}

namespace {

// Duplicates every vertex of g outside N(u) and u itself to u, in place
// of g's adjacency; the result is an independent set over G[N(u)].
Graph duplicate_non_neighbors(const Graph& g, int u) {
  Graph out = g;
  std::uint64_t others =
      ~(g.neighbors(u) | (1ull << u)) & ((g.vertex_count() == 64 ? ~0ull : (1ull << g.vertex_count()) - 1));
  while (others) {
    const int v = std::countr_zero(others);
    others &= others - 1;
    out = duplicate_vertex(out, v, u);
  }
  return out;
}

int argmax_weight(const std::vector<double>& w, int lo, int hi) {
  int best = lo;
  for (int v = lo + 1; v < hi; ++v)
    if (w[static_cast<std::size_t>(v)] > w[static_cast<std::size_t>(best)]) best = v;
  return best;
}

// Max-weight vertex of g (lowest id on ties), weights taken from the
// Perron vector of join(r, g) when r is present.
int max_weight_vertex(const Graph* r, const Graph& g) {
  if (r == nullptr) {
    const auto s = spectral_summary(g);
    const auto w = vertex_weights(g, s.perron);
    return argmax_weight(w, 0, g.vertex_count());
  }
  const Graph joined = join(*r, g);
  const auto s = spectral_summary(joined);
  const auto w = vertex_weights(joined, s.perron);
  const int nr = r->vertex_count();
  return argmax_weight(w, nr, nr + g.vertex_count()) - nr;
}

}  // namespace

Graph zykov_step(const Graph& g) {
  if (g.vertex_count() < 2 || !is_connected(g))
    throw std::invalid_argument("zykov_step requires a connected graph on >= 2 vertices");
  return duplicate_non_neighbors(g, max_weight_vertex(nullptr, g));
}

Graph zykov_step_under_join(const Graph& r, const Graph& g) {
  return duplicate_non_neighbors(g, max_weight_vertex(&r, g));
}

ZykovTrajectory zykov_trajectory(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("zykov_trajectory requires a connected graph");
  ZykovTrajectory out;
  out.graphs.push_back(g);
  out.q1_values.push_back(q1(g));

  Graph tail = g;            // working subgraph, still to be decomposed
  bool tail_remains = true;  // false once the last part swallowed the whole tail
  while (tail_remains && tail.edge_count() > 0) {
    int u;
    if (out.part_sizes.empty()) {
      u = max_weight_vertex(nullptr, tail);
    } else {
      const Graph prefix = complete_multipartite(out.part_sizes);
      u = max_weight_vertex(&prefix, tail);
    }
    // peel off {u} plus its non-neighbors in the tail as one independent part
    out.part_sizes.push_back(tail.vertex_count() - tail.degree(u));
    ++out.steps;
    if (tail.neighbors(u) == 0)
      tail_remains = false;
    else
      tail = induced_subgraph(tail, tail.neighbors(u));
    const Graph after = tail_remains ? join(complete_multipartite(out.part_sizes), tail)
                                     : complete_multipartite(out.part_sizes);
    out.graphs.push_back(after);
    out.q1_values.push_back(q1(after));
  }
  int peeled = 0;
  for (int p : out.part_sizes) peeled += p;
  if (peeled < g.vertex_count()) out.part_sizes.push_back(g.vertex_count() - peeled);
  return out;
}

}  // namespace q1lab
