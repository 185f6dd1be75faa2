#pragma once

#include <span>
#include <vector>

#include "q1lab/graph.hpp"

namespace q1lab {

/// Extreme eigen-data of the signless Laplacian Q(G) = D(G) + A(G).
struct SpectralSummary {
  double q1 = 0;               // largest eigenvalue
  double q_min = 0;            // smallest eigenvalue (0 iff bipartite, connected case)
  std::vector<double> perron;  // unit eigenvector for q1, entries >= 0 for connected G
  double residual = 0;         // max-norm of Q*perron - q1*perron
  int iterations = 0;          // Jacobi sweeps used
};

/// Dense row-major Q(G): Q[i][i] = d(i), Q[i][j] = 1 iff ij is an edge.
std::vector<double> signless_laplacian(const Graph& g);

/// All eigenvalues (ascending) and eigenvectors of a dense symmetric
/// matrix, via cyclic Jacobi rotations.  Converges when the off-diagonal
/// Frobenius norm drops below 1e-12; throws after 100 sweeps.
struct EigenSystem {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major; vectors[k*n+i] = component i of eigenvector k
  int sweeps = 0;
};
EigenSystem jacobi_eigensystem(std::vector<double> a, int n);

SpectralSummary spectral_summary(const Graph& g);
double q1(const Graph& g);
double q_min(const Graph& g);

/// Vertex weights w(u) = sum over neighbors v of f(u)+f(v); 0 for
/// isolated vertices.  Equals (Q f)(u) componentwise.
std::vector<double> vertex_weights(const Graph& g, std::span<const double> f);

/// One duplication step toward the join form: picks the vertex u of
/// maximum Perron weight (lowest id on ties) and duplicates every
/// non-neighbor of u to u.  The result is Kbar_p joined with G[N(u)]
/// and its q1 is never smaller than q1(G).  Requires G connected with
/// at least 2 vertices.
Graph zykov_step(const Graph& g);

/// Same step applied to G inside the join R * G: the Perron vector of
/// Q(R * G) is used, u is chosen among V(G) only, and the transformed
/// copy of G is returned.
Graph zykov_step_under_join(const Graph& r, const Graph& g);

/// Full duplication chain from a connected graph down to its complete
/// multipartite fixed point: repeatedly peels an independent part off
/// the working subgraph via zykov_step_under_join.  q1 values along the
/// chain are non-decreasing and the number of steps is at most the
/// clique number of the input.
struct ZykovTrajectory {
  std::vector<Graph> graphs;      // graphs[0] = input, graphs.back() = fixed point
  std::vector<double> q1_values;  // aligned with graphs
  std::vector<int> part_sizes;    // parts of the final complete multipartite graph
  int steps = 0;
};
ZykovTrajectory zykov_trajectory(const Graph& g);

}  // namespace q1lab
