#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "q1lab/graph.hpp"

namespace q1lab {

/// Relative gap below which a bound counts as attained.  Shared by the
/// report code and the verification sweeps; the CLI can override it via
/// the Q1LAB_EQ_TOL environment variable.
inline constexpr double kEqualityTol = 1e-7;

inline bool bound_attained(double bound, double q1, double tol = kEqualityTol) {
  return std::abs(bound - q1) <= tol * std::max(1.0, std::abs(bound));
}

/// Clique upper bound: with n = k*w + r, 0 <= r < w,
/// ((3w-4)k + 3r - 2 + sqrt(k^2 w^2 + ((2r+4)w - 8r)k + (r-2)^2)) / 2.
/// Tight exactly on complete bipartite graphs (w = 2) and Turan graphs
/// (w >= 3).  Returns 0 for w = 1 (the only connected case is K1).
double ub_clique(int n, int w);

/// q1 of the extremal complete t-partite graph: n for t = 2, otherwise
/// the same expression as ub_clique with t parts.  Equals q1(turan(n,t)).
double ub_multipartite(int n, int t);

/// Chromatic variant of ub_clique, valid since omega <= chi; requires chi >= 3.
double ub_chromatic(int n, int chi);

/// 2n(1 - 1/w).
double ub_hansen_lucas(int n, int w);

/// max over non-isolated vertices of d_i + sqrt(d_i * m_i).
double ub_oliveira_1(const DegreeProfile& p);

/// max over non-isolated vertices of (d_i + sqrt(d_i^2 + 8 d_i m_i)) / 2.
double ub_oliveira_2(const DegreeProfile& p);

/// n + d1 - n/w.
double ub_liu_liu(int n, int d1, int w);

/// min over ranks i (degrees sorted descending) of
/// (d1 + 2 d_i - 1 + sqrt((2 d_i - d1 + 1)^2 + 8 (i-1)(d1 - d_i))) / 2.
double ub_yu(const DegreeProfile& p);

/// Lower bound attained by the path (w = 2) / kite (w >= 3):
/// 2 + 2cos(pi/n), or q1(kite(n,w)) from the eigensolver.
double lb_clique(int n, int w);

/// Closed form of q1(kite(w+1,w)): (2w - 1 + sqrt(4w^2 - 12w + 17)) / 2,
/// a clique-only lower bound for any order; requires w >= 3.
double lb_clique_closed(int w);

/// |E(turan(n,t))| = (t^2-t)/2 * k^2 + (t-1)rk + r(r-1)/2.
long long turan_edge_count(int n, int t);

enum class BoundId { clique, oliveira1, oliveira2, liu_liu, yu, lower };

/// Wire name used in CSV headers and JSON keys ("b5", "b13", ..., "lb").
std::string_view bound_wire_name(BoundId id);

struct BoundEntry {
  BoundId id;
  bool applicable = false;  // false when the bound's hypotheses fail (e.g. disconnected input)
  double value = 0;
  double slack = 0;  // bound - q1 for upper bounds, q1 - bound for the lower bound
  bool attained = false;
};

/// One evaluated graph: all report bounds plus the invariants they need.
struct BoundReport {
  std::string graph6;
  int n = 0;
  int m = 0;
  int omega = 0;
  std::optional<int> chi;  // absent beyond the exact-solver cap (n > 16)
  double q1 = 0;
  bool connected = false;
  std::array<BoundEntry, 6> entries;  // order: clique, oliveira1, oliveira2, liu_liu, yu, lower
};

/// Evaluates every report bound on g.  For disconnected input the bounds
/// are marked inapplicable but q1/omega/chi are still computed.
BoundReport evaluate_all(const Graph& g, double eq_tol = kEqualityTol);

std::string bound_report_csv_header();
std::string to_csv_row(const BoundReport& r);
std::string to_json_string(const BoundReport& r);
std::string format_report_table(const BoundReport& r);

}  // namespace q1lab
