#include "q1lab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "q1lab/families.hpp"
#include "q1lab/graph_io.hpp"
#include "q1lab/spectral.hpp"

namespace q1lab {

namespace {

int effective_workers(int w) {
  if (w > 0) return w;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// bit index -> (i, j) of the upper-triangle edge order
struct BitPairTable {
  std::array<std::pair<std::uint8_t, std::uint8_t>, 64> pairs{};
  BitPairTable() {
    int b = 0;
    for (int j = 1; j < 12 && b < 64; ++j)
      for (int i = 0; i < j && b < 64; ++i, ++b)
        pairs[static_cast<std::size_t>(b)] = {static_cast<std::uint8_t>(i),
                                              static_cast<std::uint8_t>(j)};
  }
};
const BitPairTable kBitPairs;

// all permutations of {0..n-1}, flattened; row 0 is the identity
struct PermSet {
  int n = 0;
  std::vector<std::uint8_t> flat;
  std::size_t count() const { return flat.size() / static_cast<std::size_t>(n); }
  const std::uint8_t* row(std::size_t r) const { return flat.data() + r * static_cast<std::size_t>(n); }
};

PermSet make_perm_set(int n) {
  PermSet ps;
  ps.n = n;
  std::vector<std::uint8_t> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    ps.flat.insert(ps.flat.end(), p.begin(), p.end());
  } while (std::next_permutation(p.begin(), p.end()));
  return ps;
}

const PermSet& perm_set(int n) {
  static const std::array<PermSet, 9> sets = [] {
    std::array<PermSet, 9> out;
    for (int k = 1; k <= 8; ++k) out[static_cast<std::size_t>(k)] = make_perm_set(k);
    return out;
  }();
  if (n < 1 || n > 8) throw std::invalid_argument("permutation table supports n <= 8");
  return sets[static_cast<std::size_t>(n)];
}

std::uint64_t relabel_mask(std::uint64_t mask, const std::uint8_t* p) {
  std::uint64_t rel = 0;
  while (mask) {
    const int b = std::countr_zero(mask);
    mask &= mask - 1;
    int a = p[kBitPairs.pairs[static_cast<std::size_t>(b)].first];
    int c = p[kBitPairs.pairs[static_cast<std::size_t>(b)].second];
    if (a > c) std::swap(a, c);
    rel |= 1ull << (c * (c - 1) / 2 + a);
  }
  return rel;
}

bool is_min_mask(std::uint64_t mask, const PermSet& perms) {
  for (std::size_t r = 1; r < perms.count(); ++r)
    if (relabel_mask(mask, perms.row(r)) < mask) return false;
  return true;
}

// distinct labeled copies of g under all relabelings
std::uint64_t labeled_copy_count(const Graph& g) {
  const auto& perms = perm_set(g.vertex_count());
  const std::uint64_t mask = to_edge_mask(g);
  std::set<std::uint64_t> seen;
  for (std::size_t r = 0; r < perms.count(); ++r) seen.insert(relabel_mask(mask, perms.row(r)));
  return seen.size();
}

template <class Acc, class Fn>
std::vector<Acc> scan_connected_chunks(int n, const SweepOptions& opts, Fn per_graph) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("connected enumeration supports 2 <= n <= 8");
  if (opts.dedup && n > 7)
    throw std::invalid_argument("dedup enumeration supports n <= 7");
  const int bits = n * (n - 1) / 2;
  const std::uint64_t total = 1ull << bits;
  const int workers = effective_workers(opts.workers);
  const std::uint64_t chunks =
      std::min<std::uint64_t>(total, static_cast<std::uint64_t>(workers) * 16);
  std::vector<Acc> accs(chunks);
  const PermSet* perms = opts.dedup ? &perm_set(n) : nullptr;
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      const std::uint64_t lo = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
      const std::uint64_t hi =
          total / chunks * (c + 1) + std::min<std::uint64_t>(c + 1, total % chunks);
      Acc& acc = accs[c];
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        Graph g = from_edge_mask(n, mask);
        if (!is_connected(g)) continue;
        if (perms && !is_min_mask(mask, *perms)) continue;
        per_graph(acc, g, mask);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return accs;
}

}  // namespace

std::uint64_t connected_labeled_count(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("connected_labeled_count supports n <= 8");
  // c(n) = 2^C(n,2) - sum over the size k of the component of vertex 1
  std::array<std::uint64_t, 9> c{};
  std::array<std::array<std::uint64_t, 9>, 9> binom{};
  for (int i = 0; i <= 8; ++i) {
    binom[static_cast<std::size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  c[1] = 1;
  for (int k = 2; k <= n; ++k) {
    std::uint64_t value = 1ull << (k * (k - 1) / 2);
    for (int s = 1; s < k; ++s)
      value -= binom[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - 1)] *
               c[static_cast<std::size_t>(s)] * (1ull << ((k - s) * (k - s - 1) / 2));
    c[static_cast<std::size_t>(k)] = value;
  }
  return c[static_cast<std::size_t>(n)];
}

void for_each_connected(int n, bool dedup,
                        const std::function<void(const Graph&, std::uint64_t)>& fn) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("connected enumeration supports 2 <= n <= 8");
  if (dedup && n > 7) throw std::invalid_argument("dedup enumeration supports n <= 7");
  const std::uint64_t total = 1ull << (n * (n - 1) / 2);
  const PermSet* perms = dedup ? &perm_set(n) : nullptr;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = from_edge_mask(n, mask);
    if (!is_connected(g)) continue;
    if (perms && !is_min_mask(mask, *perms)) continue;
    fn(g, mask);
  }
}

std::uint64_t count_connected(int n, bool dedup, int workers) {
  SweepOptions opts;
  opts.workers = workers;
  opts.dedup = dedup;
  auto accs = scan_connected_chunks<std::uint64_t>(
      n, opts, [](std::uint64_t& acc, const Graph&, std::uint64_t) { ++acc; });
  std::uint64_t total = 0;
  for (auto a : accs) total += a;
  return total;
}

std::uint64_t canonical_edge_mask(const Graph& g) {
  const auto& perms = perm_set(g.vertex_count());
  const std::uint64_t mask = to_edge_mask(g);
  std::uint64_t best = mask;
  for (std::size_t r = 1; r < perms.count(); ++r)
    best = std::min(best, relabel_mask(mask, perms.row(r)));
  return best;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto degs = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;
  return canonical_edge_mask(a) == canonical_edge_mask(b);
}

std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g) {
  const int n = g.vertex_count();
  const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  std::uint64_t assigned = 0;
  std::vector<int> sizes;
  for (int u = 0; u < n; ++u) {
    if ((assigned >> u) & 1u) continue;
    const std::uint64_t row = g.neighbors(u);
    const std::uint64_t part = all & ~row;  // u plus its non-neighbors
    std::uint64_t rest = part;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (g.neighbors(v) != row) return std::nullopt;
    }
    assigned |= part;
    sizes.push_back(std::popcount(part));
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

namespace {

bool is_turan_graph(const Graph& g, int t) {
  const auto parts = complete_multipartite_parts(g);
  if (!parts || static_cast<int>(parts->size()) != t) return false;
  auto expect = turan_part_sizes(g.vertex_count(), t);
  std::sort(expect.begin(), expect.end(), std::greater<>());
  return *parts == expect;
}

std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
  const auto parts = complete_multipartite_parts(g);
  if (!parts || parts->size() != 2) return std::nullopt;
  return std::make_pair((*parts)[0], (*parts)[1]);
}

struct Hit {
  std::uint64_t mask;
  int omega;
  double q1v;
};

struct SweepAcc {
  std::uint64_t connected = 0;
  std::array<std::uint64_t, 65> class_count{};
  std::array<double, 65> extreme_q1{};
  std::vector<Hit> equality;
  std::vector<Hit> violations;
  double min_gap = std::numeric_limits<double>::infinity();
};

VerifyRecord make_record(int n, const Hit& h, double bound, bool upper, double eq_tol,
                         std::string family) {
  VerifyRecord r;
  r.mask = h.mask;
  const Graph g = from_edge_mask(n, h.mask);
  r.graph6 = to_graph6(g);
  r.n = n;
  r.m = g.edge_count();
  r.omega = h.omega;
  r.chi = chromatic_number(g);
  r.q1 = h.q1v;
  r.bound = bound;
  r.slack = upper ? bound - h.q1v : h.q1v - bound;
  r.attained = bound_attained(bound, h.q1v, eq_tol);
  r.family = std::move(family);
  return r;
}

std::string family_name_for_equality(const Graph& g, int omega, bool lower_sweep_mode) {
  if (lower_sweep_mode) {
    const FamilySpec spec{omega >= 3 ? FamilyKind::kite : FamilyKind::path,
                          omega >= 3 ? std::vector<int>{g.vertex_count(), omega}
                                     : std::vector<int>{g.vertex_count()}};
    return spec.name();
  }
  if (omega == 2) {
    if (const auto pq = complete_bipartite_parts(g))
      return "kpq:" + std::to_string(pq->first) + "," + std::to_string(pq->second);
    return "";
  }
  if (is_turan_graph(g, omega))
    return "turan:" + std::to_string(g.vertex_count()) + "," + std::to_string(omega);
  return "";
}

}  // namespace

SweepSummary sharpness_sweep(int n, const SweepOptions& opts) {
  SweepSummary out;
  out.check = "upper";
  out.n = n;
  out.dedup = opts.dedup;
  out.masks_scanned = 1ull << (n * (n - 1) / 2);
  const double tol = opts.eq_tol;

  std::array<double, 65> bound{};
  for (int w = 2; w <= n; ++w) bound[static_cast<std::size_t>(w)] = ub_clique(n, w);

  auto accs = scan_connected_chunks<SweepAcc>(
      n, opts, [&](SweepAcc& acc, const Graph& g, std::uint64_t mask) {
        ++acc.connected;
        const int w = clique_number(g);
        const double q = q1(g);
        const double b = bound[static_cast<std::size_t>(w)];
        ++acc.class_count[static_cast<std::size_t>(w)];
        acc.extreme_q1[static_cast<std::size_t>(w)] =
            std::max(acc.extreme_q1[static_cast<std::size_t>(w)], q);
        const double band = tol * std::max(1.0, std::abs(b));
        if (q > b + band) {
          acc.violations.push_back({mask, w, q});
        } else if (bound_attained(b, q, tol)) {
          acc.equality.push_back({mask, w, q});
        } else {
          acc.min_gap = std::min(acc.min_gap, b - q);
        }
      });

  std::array<std::uint64_t, 65> class_count{};
  std::array<std::uint64_t, 65> attained_count{};
  std::array<double, 65> extreme{};
  double min_gap = std::numeric_limits<double>::infinity();
  for (const auto& acc : accs) {
    out.connected_count += acc.connected;
    min_gap = std::min(min_gap, acc.min_gap);
    for (int w = 2; w <= n; ++w) {
      class_count[static_cast<std::size_t>(w)] += acc.class_count[static_cast<std::size_t>(w)];
      extreme[static_cast<std::size_t>(w)] =
          std::max(extreme[static_cast<std::size_t>(w)], acc.extreme_q1[static_cast<std::size_t>(w)]);
    }
    for (const auto& h : acc.violations)
      out.violations.push_back(make_record(n, h, bound[static_cast<std::size_t>(h.omega)], true,
                                           tol, ""));
    for (const auto& h : acc.equality) {
      const Graph g = from_edge_mask(n, h.mask);
      const std::string family = family_name_for_equality(g, h.omega, false);
      if (family.empty()) {
        out.equality_class_ok = false;
        out.note += "equality graph outside the characterized class: " + to_graph6(g) + "; ";
      }
      ++attained_count[static_cast<std::size_t>(h.omega)];
      out.equality.push_back(
          make_record(n, h, bound[static_cast<std::size_t>(h.omega)], true, tol, family));
    }
  }
  out.min_positive_slack = min_gap;

  for (int w = 2; w <= n; ++w) {
    SweepClassStat stat;
    stat.omega = w;
    stat.bound = bound[static_cast<std::size_t>(w)];
    stat.count = class_count[static_cast<std::size_t>(w)];
    stat.attained_count = attained_count[static_cast<std::size_t>(w)];
    stat.extreme_q1 = extreme[static_cast<std::size_t>(w)];
    if (opts.dedup) {
      // one class per bipartition shape for omega = 2, the Turan class otherwise
      stat.expected_attained = w == 2 ? static_cast<std::uint64_t>(n / 2) : 1;
    } else if (w == 2) {
      stat.expected_attained = (1ull << (n - 1)) - 1;  // unordered splits into two nonempty sides
    } else {
      stat.expected_attained = labeled_copy_count(turan(n, w));
    }
    stat.class_ok = stat.attained_count == stat.expected_attained;
    if (!stat.class_ok) {
      out.equality_class_ok = false;
      out.note += "omega=" + std::to_string(w) + ": " + std::to_string(stat.attained_count) +
                  " equality graphs, expected " + std::to_string(stat.expected_attained) + "; ";
    }
    out.classes.push_back(stat);
  }
  return out;
}

SweepSummary lower_sweep(int n, const SweepOptions& opts) {
  SweepSummary out;
  out.check = "lower";
  out.n = n;
  out.dedup = opts.dedup;
  out.masks_scanned = 1ull << (n * (n - 1) / 2);
  const double tol = opts.eq_tol;

  std::array<double, 65> bound{};
  for (int w = 2; w <= n; ++w) bound[static_cast<std::size_t>(w)] = lb_clique(n, w);

  auto accs = scan_connected_chunks<SweepAcc>(
      n, opts, [&](SweepAcc& acc, const Graph& g, std::uint64_t mask) {
        ++acc.connected;
        const int w = clique_number(g);
        const double q = q1(g);
        const double b = bound[static_cast<std::size_t>(w)];
        ++acc.class_count[static_cast<std::size_t>(w)];
        double& extreme = acc.extreme_q1[static_cast<std::size_t>(w)];
        if (acc.class_count[static_cast<std::size_t>(w)] == 1 || q < extreme) extreme = q;
        const double band = tol * std::max(1.0, std::abs(b));
        if (q < b - band) {
          acc.violations.push_back({mask, w, q});
        } else if (bound_attained(b, q, tol)) {
          acc.equality.push_back({mask, w, q});
        } else {
          acc.min_gap = std::min(acc.min_gap, q - b);
        }
      });

  std::array<std::uint64_t, 65> class_count{};
  std::array<std::uint64_t, 65> attained_count{};
  std::array<double, 65> extreme{};
  extreme.fill(std::numeric_limits<double>::infinity());
  double min_gap = std::numeric_limits<double>::infinity();
  for (const auto& acc : accs) {
    out.connected_count += acc.connected;
    min_gap = std::min(min_gap, acc.min_gap);
    for (int w = 2; w <= n; ++w)
      if (acc.class_count[static_cast<std::size_t>(w)]) {
        class_count[static_cast<std::size_t>(w)] += acc.class_count[static_cast<std::size_t>(w)];
        extreme[static_cast<std::size_t>(w)] = std::min(extreme[static_cast<std::size_t>(w)],
                                                        acc.extreme_q1[static_cast<std::size_t>(w)]);
      }
    for (const auto& h : acc.violations)
      out.violations.push_back(
          make_record(n, h, bound[static_cast<std::size_t>(h.omega)], false, tol, ""));
    for (const auto& h : acc.equality) {
      const Graph g = from_edge_mask(n, h.mask);
      const Graph extremal = h.omega >= 3 ? kite(n, h.omega) : path(n);
      std::string family;
      if (are_isomorphic(g, extremal)) {
        family = family_name_for_equality(g, h.omega, true);
      } else {
        out.equality_class_ok = false;
        out.note += "minimizer outside the characterized class: " + to_graph6(g) + "; ";
      }
      ++attained_count[static_cast<std::size_t>(h.omega)];
      out.equality.push_back(
          make_record(n, h, bound[static_cast<std::size_t>(h.omega)], false, tol, family));
    }
  }
  out.min_positive_slack = min_gap;

  for (int w = 2; w <= n; ++w) {
    SweepClassStat stat;
    stat.omega = w;
    stat.bound = bound[static_cast<std::size_t>(w)];
    stat.count = class_count[static_cast<std::size_t>(w)];
    stat.attained_count = attained_count[static_cast<std::size_t>(w)];
    stat.extreme_q1 = extreme[static_cast<std::size_t>(w)];
    stat.expected_attained =
        opts.dedup ? 1 : labeled_copy_count(w >= 3 ? kite(n, w) : path(n));
    stat.class_ok = stat.attained_count == stat.expected_attained &&
                    std::abs(stat.extreme_q1 - stat.bound) <=
                        opts.eq_tol * std::max(1.0, std::abs(stat.bound));
    if (!stat.class_ok) {
      out.equality_class_ok = false;
      out.note += "omega=" + std::to_string(w) + ": " + std::to_string(stat.attained_count) +
                  " minimizers, expected " + std::to_string(stat.expected_attained) + "; ";
    }
    out.classes.push_back(stat);
  }
  return out;
}

SweepSummary conjecture_region_check(int n, const SweepOptions& opts) {
  SweepSummary out;
  out.check = "region";
  out.n = n;
  out.dedup = opts.dedup;
  out.masks_scanned = 1ull << (n * (n - 1) / 2);
  const double tol = opts.eq_tol;

  auto accs = scan_connected_chunks<SweepAcc>(
      n, opts, [&](SweepAcc& acc, const Graph& g, std::uint64_t mask) {
        ++acc.connected;
        const int w = clique_number(g);
        if (!(w <= 4 || 2 * w >= n)) return;  // outside the region
        const double thr = 1.5 * n + w - 4;
        const double q = q1(g);
        ++acc.class_count[static_cast<std::size_t>(w)];
        acc.extreme_q1[static_cast<std::size_t>(w)] =
            std::max(acc.extreme_q1[static_cast<std::size_t>(w)], q);
        const double band = tol * std::max(1.0, thr);
        if (q > thr + band) {
          acc.violations.push_back({mask, w, q});
        } else if (std::abs(q - thr) <= band) {
          acc.equality.push_back({mask, w, q});
        } else {
          acc.min_gap = std::min(acc.min_gap, thr - q);
        }
      });

  double min_gap = std::numeric_limits<double>::infinity();
  for (const auto& acc : accs) {
    out.connected_count += acc.connected;
    min_gap = std::min(min_gap, acc.min_gap);
    for (const auto& h : acc.violations)
      out.violations.push_back(make_record(n, h, 1.5 * n + h.omega - 4, true, tol, ""));
    for (const auto& h : acc.equality) {
      const Graph g = from_edge_mask(n, h.mask);
      const bool characterized = (h.omega == 4 && n % 4 == 0 && is_turan_graph(g, 4)) ||
                                 (n == 2 * h.omega && is_turan_graph(g, h.omega));
      std::string family;
      if (characterized) {
        family = "turan:" + std::to_string(n) + "," + std::to_string(h.omega);
      } else {
        out.equality_class_ok = false;
        out.note += "threshold attained outside the characterized class: " + to_graph6(g) + "; ";
      }
      out.equality.push_back(make_record(n, h, 1.5 * n + h.omega - 4, true, tol, family));
    }
  }
  out.min_positive_slack = min_gap;
  return out;
}

SweepSummary ratio_check(int n, const SweepOptions& opts) {
  SweepSummary out;
  out.check = "ratio";
  out.n = n;
  out.dedup = opts.dedup;
  out.masks_scanned = 1ull << (n * (n - 1) / 2);
  const double tol = opts.eq_tol;
  const double thr = n / 2.0;

  auto accs = scan_connected_chunks<SweepAcc>(
      n, opts, [&](SweepAcc& acc, const Graph& g, std::uint64_t mask) {
        ++acc.connected;
        const int w = clique_number(g);
        const double ratio = q1(g) / w;
        const double band = tol * std::max(1.0, thr);
        if (ratio > thr + band) {
          acc.violations.push_back({mask, w, ratio});
        } else if (std::abs(ratio - thr) <= band) {
          acc.equality.push_back({mask, w, ratio});
        } else {
          acc.min_gap = std::min(acc.min_gap, thr - ratio);
        }
      });

  double min_gap = std::numeric_limits<double>::infinity();
  for (const auto& acc : accs) {
    out.connected_count += acc.connected;
    min_gap = std::min(min_gap, acc.min_gap);
    for (const auto& h : acc.violations) {
      auto rec = make_record(n, h, thr, true, tol, "");
      rec.q1 = h.q1v;  // stores the ratio rather than q1 for this check
      out.violations.push_back(rec);
    }
    for (const auto& h : acc.equality) {
      const Graph g = from_edge_mask(n, h.mask);
      std::string family;
      if (const auto pq = complete_bipartite_parts(g))
        family = "kpq:" + std::to_string(pq->first) + "," + std::to_string(pq->second);
      auto rec = make_record(n, h, thr, true, tol, family);
      rec.q1 = h.q1v;
      out.equality.push_back(rec);
    }
  }
  out.min_positive_slack = min_gap;
  return out;
}

std::vector<RegionFamilyCheck> conjecture_region_family_check(int n, double eq_tol) {
  if (n < 2 || n > 64)
    throw std::invalid_argument("conjecture_region_family_check: need 2 <= n <= 64");
  std::vector<RegionFamilyCheck> out;
  for (int w = 2; w <= n; ++w) {
    if (!(w <= 4 || 2 * w >= n)) continue;
    RegionFamilyCheck c;
    c.n = n;
    c.omega = w;
    c.q1_family = q1(turan(n, w));
    c.threshold = 1.5 * n + w - 4;
    c.slack = c.threshold - c.q1_family;
    c.equality_expected = (w == 4 && n % 4 == 0) || (n == 2 * w);
    const double band = eq_tol * std::max(1.0, c.threshold);
    c.equality_observed = std::abs(c.slack) <= band;
    c.ok = c.slack >= -band && c.equality_observed == c.equality_expected;
    out.push_back(c);
  }
  return out;
}

std::vector<CounterexampleCert> find_counterexamples(int n_max) {
  if (n_max > 64) throw std::invalid_argument("find_counterexamples: n_max must be <= 64");
  std::vector<CounterexampleCert> out;
  for (int n = 10; n <= n_max; ++n) {
    for (int w = 5; 2 * w < n + (n % 2); ++w) {  // 5 <= w < ceil(n/2)
      CounterexampleCert c;
      c.n = n;
      c.omega = w;
      c.part_sizes = turan_part_sizes(n, w);
      c.q1_solver = q1(turan(n, w));
      c.q1_closed = ub_multipartite(n, w);
      c.threshold = 1.5 * n + w - 4;
      c.margin = c.q1_solver - c.threshold;
      if (c.margin > 1e-7) out.push_back(c);
    }
  }
  return out;
}

std::vector<ExtremalCandidate> conjecture1_extremal_report(int n, double eq_tol) {
  if (n < 4 || n > 12)
    throw std::invalid_argument("conjecture1_extremal_report: need 4 <= n <= 12");
  std::vector<ExtremalCandidate> out;
  auto add = [&](std::string family, const Graph& g) {
    ExtremalCandidate c;
    c.family = std::move(family);
    c.connected = is_connected(g);
    c.n = n;
    c.omega = clique_number(g);
    c.q1 = q1(g);
    c.value = c.q1 - c.omega;
    c.bound = 1.5 * n - 4;
    c.attains = std::abs(c.value - c.bound) <= eq_tol * std::max(1.0, c.bound);
    out.push_back(c);
  };
  if (n % 2 == 0) {
    add("cpm:" + std::to_string(n), complement_perfect_matching(n));
  } else {
    add("cpmtri:" + std::to_string(n), cpm_plus_triangle(n));
    add("union(cpm:" + std::to_string(n - 3) + ",complete:3)",
        disjoint_union(complement_perfect_matching(n - 3), complete(3)));
  }
  return out;
}

std::vector<std::pair<std::string, Graph>> comparison_demo_graphs() {
  return {{"T(10,3)", turan(10, 3)}, {"join(E3,P4)", join(Graph::empty(3), path(4))}};
}

void example_table(std::ostream& out) {
  const auto demos = comparison_demo_graphs();
  out << std::left << std::setw(13) << "graph" << std::right;
  for (const char* h : {"q1", "b5", "b13", "b14", "b15", "b16"}) out << std::setw(9) << h;
  out << '\n';
  out << std::fixed << std::setprecision(4);
  for (const auto& [label, g] : demos) {
    const auto report = evaluate_all(g);
    out << std::left << std::setw(13) << label << std::right;
    out << std::setw(9) << report.q1;
    for (std::size_t i = 0; i < 5; ++i) out << std::setw(9) << report.entries[i].value;
    out << '\n';
  }
  out.unsetf(std::ios_base::floatfield);
}

IncomparabilityMatrix upper_bound_incomparability(int n_max, double margin) {
  if (n_max > 7) throw std::invalid_argument("incomparability scan supports n <= 7");
  IncomparabilityMatrix mat;
  auto consider = [&](const Graph& g) {
    const auto report = evaluate_all(g);
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b) {
        if (a == b || mat.witness[a][b]) continue;
        if (report.entries[a].value + margin < report.entries[b].value)
          mat.witness[a][b] = report.graph6;
      }
  };
  for (const auto& [label, g] : comparison_demo_graphs()) consider(g);
  for (int n = 3; n <= n_max; ++n)
    for_each_connected(n, false, [&](const Graph& g, std::uint64_t) { consider(g); });
  return mat;
}

// ---- serialization ----------------------------------------------------

std::string verify_record_csv_header() {
  return "mask,graph,n,m,omega,chi,q1,bound,slack,attained,family";
}

namespace {

std::string num10(double x) {
  std::ostringstream ss;
  ss << std::setprecision(10) << x;
  return ss.str();
}

nlohmann::json record_json(const VerifyRecord& r) {
  nlohmann::json j{{"mask", r.mask}, {"graph", r.graph6}, {"n", r.n},         {"m", r.m},
                   {"omega", r.omega}, {"q1", r.q1},      {"bound", r.bound}, {"slack", r.slack},
                   {"attained", r.attained}};
  j["chi"] = r.chi ? nlohmann::json(*r.chi) : nlohmann::json(nullptr);
  j["family"] = r.family.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.family);
  return j;
}

}  // namespace

std::string to_csv_row(const VerifyRecord& r) {
  std::ostringstream ss;
  ss << r.mask << ',' << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.omega << ',';
  if (r.chi) ss << *r.chi;
  ss << ',' << num10(r.q1) << ',' << num10(r.bound) << ',' << num10(r.slack) << ','
     << (r.attained ? 1 : 0) << ',';
  if (r.family.find(',') != std::string::npos)
    ss << '"' << r.family << '"';
  else
    ss << r.family;
  return ss.str();
}

std::string to_json_line(const VerifyRecord& r) { return record_json(r).dump(); }

std::string to_json_string(const SweepSummary& s) {
  nlohmann::json j;
  j["check"] = s.check;
  j["n"] = s.n;
  j["dedup"] = s.dedup;
  j["masks_scanned"] = s.masks_scanned;
  j["connected_count"] = s.connected_count;
  j["ok"] = s.ok();
  j["equality_class_ok"] = s.equality_class_ok;
  j["violation_count"] = s.violations.size();
  j["equality_count"] = s.equality.size();
  j["min_positive_slack"] = s.min_positive_slack;
  if (!s.note.empty()) j["note"] = s.note;
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : s.classes)
    classes.push_back({{"omega", c.omega},
                       {"bound", c.bound},
                       {"count", c.count},
                       {"attained", c.attained_count},
                       {"expected_attained", c.expected_attained},
                       {"extreme_q1", c.extreme_q1},
                       {"ok", c.class_ok}});
  j["classes"] = classes;
  if (!s.violations.empty()) j["first_violation"] = record_json(s.violations.front());
  return j.dump();
}

std::string counterexample_csv_header() {
  return "n,omega,parts,q1,closed_form,threshold,margin";
}

std::string to_csv_row(const CounterexampleCert& c) {
  std::ostringstream ss;
  ss << c.n << ',' << c.omega << ',';
  for (std::size_t i = 0; i < c.part_sizes.size(); ++i) {
    if (i) ss << '+';
    ss << c.part_sizes[i];
  }
  ss << ',' << num10(c.q1_solver) << ',' << num10(c.q1_closed) << ',' << num10(c.threshold) << ','
     << num10(c.margin);
  return ss.str();
}

std::string to_json_line(const CounterexampleCert& c) {
  nlohmann::json j{{"n", c.n},
                   {"omega", c.omega},
                   {"parts", c.part_sizes},
                   {"q1", c.q1_solver},
                   {"closed_form", c.q1_closed},
                   {"threshold", c.threshold},
                   {"margin", c.margin},
                   {"q1_minus_chi", c.q1_solver - c.omega},
                   {"conjecture_bound", 1.5 * c.n - 4}};
  return j.dump();
}

}  // namespace q1lab
