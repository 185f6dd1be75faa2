#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "q1lab/bounds.hpp"
#include "q1lab/graph.hpp"

namespace q1lab {

/// Number of connected labeled graphs on n vertices, computed by the
/// classical subtraction recurrence over the component containing
/// vertex 1.  Independent of the enumeration scan, so the two counts
/// cross-check each other.
std::uint64_t connected_labeled_count(int n);

/// Streams every connected graph on n vertices in ascending
/// upper-triangle bitmask order.  With dedup, only the minimal bitmask
/// of each isomorphism class is emitted (n <= 7); labeled mode supports
/// n <= 8.
void for_each_connected(int n, bool dedup,
                        const std::function<void(const Graph&, std::uint64_t)>& fn);

/// Parallel count of connected graphs, labeled or up to isomorphism.
std::uint64_t count_connected(int n, bool dedup, int workers = 0);

/// Smallest upper-triangle bitmask over all relabelings (n <= 8).
std::uint64_t canonical_edge_mask(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Part sizes if g is complete multipartite (duplicate-neighborhood
/// classes pairwise fully joined), nullopt otherwise.  Sizes are sorted
/// descending.
std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g);

/// One enumeration outcome attached to a bound check.
struct VerifyRecord {
  std::uint64_t mask = 0;
  std::string graph6;
  int n = 0;
  int m = 0;
  int omega = 0;
  std::optional<int> chi;
  double q1 = 0;
  double bound = 0;
  double slack = 0;  // bound - q1 for upper checks, q1 - bound for lower
  bool attained = false;
  std::string family;  // extremal family match, empty if none
};

std::string verify_record_csv_header();
std::string to_csv_row(const VerifyRecord& r);
std::string to_json_line(const VerifyRecord& r);

struct SweepOptions {
  int workers = 0;  // 0 = hardware concurrency
  bool dedup = false;
  double eq_tol = kEqualityTol;
};

/// Per clique-number statistics of a sweep.
struct SweepClassStat {
  int omega = 0;
  double bound = 0;          // class bound (upper or lower)
  std::uint64_t count = 0;   // connected graphs with this clique number
  std::uint64_t attained_count = 0;
  std::uint64_t expected_attained = 0;  // labeled size of the extremal class
  double extreme_q1 = 0;     // max q1 (upper sweeps) or min q1 (lower sweeps)
  bool class_ok = true;      // attained set matches the characterization
};

struct SweepSummary {
  std::string check;  // "upper" | "lower" | "region" | "ratio"
  int n = 0;
  bool dedup = false;
  std::uint64_t masks_scanned = 0;
  std::uint64_t connected_count = 0;
  std::vector<SweepClassStat> classes;
  std::vector<VerifyRecord> equality;    // ascending mask order
  std::vector<VerifyRecord> violations;  // ascending mask order; front() is the first witness
  double min_positive_slack = 0;         // smallest non-attained gap (diagnostic)
  bool equality_class_ok = true;
  std::string note;

  bool ok() const { return violations.empty() && equality_class_ok; }
};

std::string to_json_string(const SweepSummary& s);

/// Checks q1 <= ub_clique(n, omega) over every connected graph on n
/// vertices and that equality holds exactly on complete bipartite
/// graphs (omega = 2) and relabelings of the Turan graph (omega >= 3).
SweepSummary sharpness_sweep(int n, const SweepOptions& opts = {});

/// Checks q1 >= lb_clique(n, omega) and that the minimum is attained
/// exactly by the path (omega = 2) / kite (omega >= 3).
SweepSummary lower_sweep(int n, const SweepOptions& opts = {});

/// Exhaustive check of q1 <= 3n/2 + omega - 4 on the region
/// omega <= 4 or omega >= ceil(n/2), with the equality characterization
/// (Turan graph with omega = 4, 4 | n, or omega = n/2).  The inequality
/// only holds universally from n = 10 on; below that the sweep reports
/// honest violations (n = 4 and 5 have them).
SweepSummary conjecture_region_check(int n, const SweepOptions& opts = {});

/// Checks q1/omega <= n/2 for every connected graph; equality cases are
/// reported (complete bipartite graphs attain) but no uniqueness is
/// asserted.
SweepSummary ratio_check(int n, const SweepOptions& opts = {});

/// Family-level region check: evaluates the Turan graph (the q1
/// maximizer for its clique number) against 3n/2 + omega - 4 for every
/// omega in the region, any n <= 64.
struct RegionFamilyCheck {
  int n = 0;
  int omega = 0;
  double q1_family = 0;  // eigensolver on turan(n, omega)
  double threshold = 0;
  double slack = 0;  // threshold - q1
  bool equality_expected = false;
  bool equality_observed = false;
  bool ok = true;
};
std::vector<RegionFamilyCheck> conjecture_region_family_check(int n, double eq_tol = kEqualityTol);

/// Certificate that T(n, omega) crosses the conjectured threshold.
struct CounterexampleCert {
  int n = 0;
  int omega = 0;
  std::vector<int> part_sizes;
  double q1_solver = 0;   // eigensolver value
  double q1_closed = 0;   // multipartite closed form, for cross-validation
  double threshold = 0;   // 3n/2 + omega - 4
  double margin = 0;      // q1_solver - threshold, > 0 for emitted certificates
};

/// Scans 10 <= n <= n_max, 5 <= omega < ceil(n/2) and emits a
/// certificate whenever the eigensolver value of q1(T(n, omega)) exceeds
/// the threshold by more than 1e-7.  Since chi(T) = omega, each
/// certificate also exhibits q1 - chi > 3n/2 - 4.
std::vector<CounterexampleCert> find_counterexamples(int n_max);

std::string counterexample_csv_header();
std::string to_csv_row(const CounterexampleCert& c);
std::string to_json_line(const CounterexampleCert& c);

/// q1 - omega of the conjectured extremal families against 3n/2 - 4:
/// the complement of a perfect matching for even n, and both structural
/// readings of the matching-plus-triangle complement for odd n.
struct ExtremalCandidate {
  std::string family;
  bool connected = false;
  int n = 0;
  int omega = 0;
  double q1 = 0;
  double value = 0;  // q1 - omega
  double bound = 0;  // 3n/2 - 4
  bool attains = false;
};
std::vector<ExtremalCandidate> conjecture1_extremal_report(int n, double eq_tol = kEqualityTol);

/// The two graphs of the bound-comparison table: T(10,3) and the join
/// of an independent triple with P4.
std::vector<std::pair<std::string, Graph>> comparison_demo_graphs();

/// Writes the 2x6 comparison table (q1 and the five upper bounds) for
/// the demo graphs, 4 decimal places.
void example_table(std::ostream& out);

/// Ordered-pair witnesses that the five upper bounds are incomparable:
/// witness[a][b] holds the graph6 of a connected graph where bound a is
/// strictly smaller than bound b, when one exists in the searched corpus
/// (all connected graphs up to n_max plus the demo graphs).
struct IncomparabilityMatrix {
  std::array<std::array<std::optional<std::string>, 5>, 5> witness;
};
IncomparabilityMatrix upper_bound_incomparability(int n_max, double margin = 1e-6);

}  // namespace q1lab
