#include "q1lab/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "q1lab/families.hpp"
#include "q1lab/graph_io.hpp"
#include "q1lab/spectral.hpp"

namespace q1lab {

namespace {

double clique_expression(int n, int w) {
  const int k = n / w, r = n % w;
  const double root = std::sqrt(static_cast<double>(k) * k * w * w +
                                (static_cast<double>(2 * r + 4) * w - 8.0 * r) * k +
                                static_cast<double>(r - 2) * (r - 2));
  return ((3.0 * w - 4) * k + 3.0 * r - 2 + root) / 2;
}

}  // namespace

double ub_clique(int n, int w) {
  if (w < 1 || w > n) throw std::invalid_argument("ub_clique: need 1 <= w <= n");
  if (w == 1) return 0.0;  // only K1 is connected with clique number 1
  return clique_expression(n, w);
}

double ub_multipartite(int n, int t) {
  if (t < 2 || t > n) throw std::invalid_argument("ub_multipartite: need 2 <= t <= n");
  if (t == 2) return n;
  return clique_expression(n, t);
}

double ub_chromatic(int n, int chi) {
  if (chi < 3 || chi > n) throw std::invalid_argument("ub_chromatic: need 3 <= chi <= n");
  return clique_expression(n, chi);
}

double ub_hansen_lucas(int n, int w) {
  if (w < 1 || w > n) throw std::invalid_argument("ub_hansen_lucas: need 1 <= w <= n");
  return 2.0 * n * (1.0 - 1.0 / w);
}

double ub_oliveira_1(const DegreeProfile& p) {
  double best = 0;  // edgeless graphs fall through to 0 by convention
  for (std::size_t u = 0; u < p.two_average.size(); ++u)
    if (p.two_average[u]) {
      const double d = p.degrees[u];
      best = std::max(best, d + std::sqrt(d * *p.two_average[u]));
    }
  return best;
}

double ub_oliveira_2(const DegreeProfile& p) {
  double best = 0;
  for (std::size_t u = 0; u < p.two_average.size(); ++u)
    if (p.two_average[u]) {
      const double d = p.degrees[u];
      best = std::max(best, (d + std::sqrt(d * d + 8 * d * *p.two_average[u])) / 2);
    }
  return best;
}

double ub_liu_liu(int n, int d1, int w) {
  if (w < 1) throw std::invalid_argument("ub_liu_liu: clique number must be >= 1");
  return n + d1 - static_cast<double>(n) / w;
}

double ub_yu(const DegreeProfile& p) {
  if (p.n < 1) throw std::invalid_argument("ub_yu: empty profile");
  const int d1 = p.degrees_desc.front();
  double best = 0;
  for (int i = 1; i <= p.n; ++i) {
    const int di = p.degrees_desc[static_cast<std::size_t>(i - 1)];
    const double inner = static_cast<double>(2 * di - d1 + 1) * (2 * di - d1 + 1) +
                         8.0 * (i - 1) * (d1 - di);
    const double value = (d1 + 2.0 * di - 1 + std::sqrt(inner)) / 2;
    if (i == 1 || value < best) best = value;
  }
  return best;
}

double lb_clique(int n, int w) {
  if (w < 2 || w > n) throw std::invalid_argument("lb_clique: need 2 <= w <= n");
  if (w == 2) return 2 + 2 * std::cos(M_PI / n);
  return q1(kite(n, w));
}

double lb_clique_closed(int w) {
  if (w < 3) throw std::invalid_argument("lb_clique_closed: need w >= 3");
  return (2.0 * w - 1 + std::sqrt(4.0 * w * w - 12.0 * w + 17)) / 2;
}

long long turan_edge_count(int n, int t) {
  if (t < 1 || t > n) throw std::invalid_argument("turan_edge_count: need 1 <= t <= n");
  const long long k = n / t, r = n % t;
  return (static_cast<long long>(t) * t - t) / 2 * k * k + (t - 1) * r * k + r * (r - 1) / 2;
}

std::string_view bound_wire_name(BoundId id) {
  switch (id) {
    case BoundId::clique: return "b5";
    case BoundId::oliveira1: return "b13";
    case BoundId::oliveira2: return "b14";
    case BoundId::liu_liu: return "b15";
    case BoundId::yu: return "b16";
    case BoundId::lower: return "lb";
  }
  return "?";
}

BoundReport evaluate_all(const Graph& g, double eq_tol) {
  BoundReport r;
  r.graph6 = to_graph6(g);
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.omega = clique_number(g);
  if (r.n <= 16) r.chi = chromatic_number(g);
  r.q1 = q1(g);
  r.connected = is_connected(g);

  const auto profile = degree_profile(g);
  const int d1 = profile.degrees_desc.front();

  auto set = [&](std::size_t slot, BoundId id, bool applicable, double value, bool upper) {
    BoundEntry& e = r.entries[slot];
    e.id = id;
    e.applicable = applicable;
    if (!applicable) return;
    e.value = value;
    e.slack = upper ? value - r.q1 : r.q1 - value;
    e.attained = bound_attained(value, r.q1, eq_tol);
  };

  // Theorem hypotheses need a connected graph; degree bounds additionally
  // need at least one edge.
  const bool conn = r.connected;
  const bool has_edge = r.m > 0;
  set(0, BoundId::clique, conn, r.omega >= 1 ? ub_clique(r.n, r.omega) : 0.0, true);
  set(1, BoundId::oliveira1, conn && has_edge, conn && has_edge ? ub_oliveira_1(profile) : 0.0, true);
  set(2, BoundId::oliveira2, conn && has_edge, conn && has_edge ? ub_oliveira_2(profile) : 0.0, true);
  set(3, BoundId::liu_liu, conn, ub_liu_liu(r.n, d1, r.omega), true);
  set(4, BoundId::yu, conn, ub_yu(profile), true);
  set(5, BoundId::lower, conn, r.omega >= 2 ? lb_clique(r.n, r.omega) : 0.0, false);
  return r;
}

std::string bound_report_csv_header() { return "n,m,omega,chi,q1,b5,b13,b14,b15,b16,lb"; }

namespace {

std::string num(double x) {
  std::ostringstream ss;
  ss << std::setprecision(10) << x;
  return ss.str();
}

}  // namespace

std::string to_csv_row(const BoundReport& r) {
  std::ostringstream ss;
  ss << r.n << ',' << r.m << ',' << r.omega << ',';
  if (r.chi) ss << *r.chi;
  ss << ',' << num(r.q1);
  for (const auto& e : r.entries) {
    ss << ',';
    if (e.applicable) ss << num(e.value);
  }
  return ss.str();
}

std::string to_json_string(const BoundReport& r) {
  nlohmann::json j;
  j["graph"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["omega"] = r.omega;
  if (r.chi) j["chi"] = *r.chi; else j["chi"] = nullptr;
  j["q1"] = r.q1;
  j["connected"] = r.connected;
  nlohmann::json bounds = nlohmann::json::object();
  for (const auto& e : r.entries) {
    if (!e.applicable) {
      bounds[std::string(bound_wire_name(e.id))] = nullptr;
      continue;
    }
    bounds[std::string(bound_wire_name(e.id))] = {
        {"value", e.value}, {"slack", e.slack}, {"attained", e.attained}};
  }
  j["bounds"] = bounds;
  return j.dump();
}

std::string format_report_table(const BoundReport& r) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4);
  ss << "graph   " << r.graph6 << "\n";
  ss << "n       " << r.n << "\n";
  ss << "m       " << r.m << "\n";
  ss << "omega   " << r.omega << "\n";
  ss << "chi     ";
  if (r.chi) ss << *r.chi; else ss << "n/a";
  ss << "\n";
  ss << "q1      " << r.q1 << "\n";
  for (const auto& e : r.entries) {
    ss << std::left << std::setw(8) << bound_wire_name(e.id) << std::right;
    if (!e.applicable) {
      ss << "n/a\n";
      continue;
    }
    ss << e.value << "  slack " << std::showpos << e.slack << std::noshowpos
       << (e.attained ? "  attained" : "") << "\n";
  }
  return ss.str();
}

}  // namespace q1lab
