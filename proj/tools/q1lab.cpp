// q1lab: signless Laplacian spectral radius toolkit.
//
// Exit codes: 0 success, 1 mathematical violation found (a sweep witness,
// a failed certificate cross-check, or a missing expected certificate),
// 2 usage or parse error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "q1lab/bounds.hpp"
#include "q1lab/families.hpp"
#include "q1lab/graph.hpp"
#include "q1lab/graph_io.hpp"
#include "q1lab/spectral.hpp"
#include "q1lab/verify.hpp"

namespace {

using namespace q1lab;

struct InputSource {
  std::string edges_path;
  std::string graph6_text;
  std::string family_text;

  Graph load() const {
    if (!edges_path.empty()) return read_graph_file(edges_path);
    if (!graph6_text.empty()) return from_graph6(graph6_text);
    return FamilySpec::parse(family_text).build();
  }
};

void add_input_options(CLI::App* cmd, InputSource& src) {
  auto* edges = cmd->add_option("--edges", src.edges_path, "edge-list file ('n m' header)");
  auto* g6 = cmd->add_option("--graph6", src.graph6_text, "graph6 string");
  auto* fam = cmd->add_option("--family", src.family_text,
                              "family spec, e.g. turan:10,3 kite:7,4 kpq:2,3 path:6 "
                              "complete:5 cpm:8 cpmtri:9 multipartite:4,3,3");
  edges->excludes(g6)->excludes(fam);
  g6->excludes(fam);
  cmd->callback([edges, g6, fam] {
    if (edges->count() + g6->count() + fam->count() != 1)
      throw CLI::ValidationError("exactly one of --edges/--graph6/--family is required");
  });
}

struct Sink {
  std::ofstream file;
  std::ostream* out = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    out = &file;
  }
  std::ostream& stream() { return *out; }
};

double equality_tol_from_env() {
  const char* raw = std::getenv("Q1LAB_EQ_TOL");
  if (raw == nullptr || *raw == '\0') return kEqualityTol;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0) || !std::isfinite(value))
    throw std::invalid_argument("Q1LAB_EQ_TOL must be a positive number, got '" +
                                std::string(raw) + "'");
  return value;
}

int run_eval(const InputSource& src, const std::string& format, Sink& sink, double tol) {
  const Graph g = src.load();
  if (!is_connected(g))
    std::cerr << "warning: input graph is disconnected; "
                 "bounds with connectivity hypotheses are reported as n/a\n";
  const auto report = evaluate_all(g, tol);
  if (format == "csv")
    sink.stream() << bound_report_csv_header() << '\n' << to_csv_row(report) << '\n';
  else if (format == "json")
    sink.stream() << to_json_string(report) << '\n';
  else
    sink.stream() << format_report_table(report);
  return 0;
}

int run_family(const std::string& spec_text, const std::string& format, Sink& sink) {
  const Graph g = FamilySpec::parse(spec_text).build();
  if (format == "edges")
    sink.stream() << to_edge_list_text(g);
  else
    sink.stream() << to_graph6(g) << '\n';
  return 0;
}

void print_violation(const SweepSummary& s) {
  if (s.violations.empty()) return;
  const auto& v = s.violations.front();
  std::cerr << "violation (" << s.check << " sweep, n=" << s.n << "): graph " << v.graph6
            << " omega=" << v.omega << " value=" << std::setprecision(12) << v.q1
            << " bound=" << v.bound << " slack=" << v.slack << "\n";
  std::cerr << format_report_table(evaluate_all(from_graph6(v.graph6)));
}

void print_sweep_table(const SweepSummary& s, std::ostream& out) {
  out << s.check << " sweep, n=" << s.n << (s.dedup ? " (dedup)" : "") << ": scanned "
      << s.masks_scanned << " bitmasks, " << s.connected_count << " connected graphs, "
      << s.violations.size() << " violations, " << s.equality.size() << " equality cases"
      << (s.ok() ? "" : "  ** FAILED **") << '\n';
  if (!s.classes.empty()) {
    out << "  omega     bound  graphs  attained  expected  extreme_q1  ok\n";
    out << std::fixed << std::setprecision(4);
    for (const auto& c : s.classes) {
      if (c.count == 0 && c.attained_count == 0) continue;
      out << "  " << std::setw(5) << c.omega << std::setw(10) << c.bound << std::setw(8) << c.count
          << std::setw(10) << c.attained_count << std::setw(10) << c.expected_attained
          << std::setw(12) << c.extreme_q1 << "  " << (c.class_ok ? "yes" : "NO") << '\n';
    }
    out.unsetf(std::ios_base::floatfield);
  }
  if (!s.equality.empty()) {
    out << "  equality cases:\n";
    for (const auto& r : s.equality)
      out << "    " << r.graph6 << "  omega=" << r.omega << "  value=" << std::setprecision(10)
          << r.q1 << (r.family.empty() ? "" : "  [" + r.family + "]") << '\n';
  }
  if (!s.note.empty()) out << "  note: " << s.note << '\n';
}

int run_sweep(int n, const std::string& check, const SweepOptions& opts,
              const std::string& format, Sink& sink) {
  std::vector<SweepSummary> results;
  auto want = [&](const char* name) { return check == "all" || check == name; };

  if (n > 7) {
    // only the family-level region check scales past the exhaustive cap
    if (check != "region") {
      std::cerr << "error: exhaustive sweeps support n <= 7; only '--check region' is "
                   "available for larger n (family-level)\n";
      return 2;
    }
    const auto rows = conjecture_region_family_check(n, opts.eq_tol);
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.ok;
    if (format == "table") {
      sink.stream() << "region family check, n=" << n << (ok ? "" : "  ** FAILED **") << '\n';
      sink.stream() << std::fixed << std::setprecision(4);
      for (const auto& r : rows)
        sink.stream() << "  omega=" << std::setw(2) << r.omega << " q1(T)=" << std::setw(9)
                      << r.q1_family << " threshold=" << std::setw(9) << r.threshold
                      << " equality=" << (r.equality_observed ? "yes" : "no ")
                      << " expected=" << (r.equality_expected ? "yes" : "no ")
                      << (r.ok ? "" : "  VIOLATION") << '\n';
      sink.stream().unsetf(std::ios_base::floatfield);
    } else {
      for (const auto& r : rows)
        sink.stream() << "{\"n\":" << r.n << ",\"omega\":" << r.omega << ",\"q1\":"
                      << std::setprecision(12) << r.q1_family << ",\"threshold\":" << r.threshold
                      << ",\"ok\":" << (r.ok ? "true" : "false") << "}\n";
    }
    return ok ? 0 : 1;
  }

  if (want("upper")) results.push_back(sharpness_sweep(n, opts));
  if (want("lower")) results.push_back(lower_sweep(n, opts));
  if (want("region") && n <= 7) results.push_back(conjecture_region_check(n, opts));
  if (want("ratio")) results.push_back(ratio_check(n, opts));
  if (results.empty()) {
    std::cerr << "error: unknown check '" << check << "'\n";
    return 2;
  }

  bool ok = true;
  for (const auto& s : results) {
    ok = ok && s.ok();
    if (format == "csv") {
      sink.stream() << verify_record_csv_header() << '\n';
      for (const auto& r : s.equality) sink.stream() << to_csv_row(r) << '\n';
      for (const auto& r : s.violations) sink.stream() << to_csv_row(r) << '\n';
      print_sweep_table(s, std::cerr);
    } else if (format == "json") {
      sink.stream() << to_json_string(s) << '\n';
    } else {
      print_sweep_table(s, sink.stream());
    }
    print_violation(s);
  }
  return ok ? 0 : 1;
}

int run_counterexamples(int n_max, const std::string& format, Sink& sink) {
  const auto certs = find_counterexamples(n_max);

  // cross-validate: eigensolver vs closed form, and certificate coverage
  bool ok = true;
  for (const auto& c : certs)
    if (std::abs(c.q1_solver - c.q1_closed) > 1e-7) {
      std::cerr << "certificate cross-check failed at T(" << c.n << "," << c.omega
                << "): solver " << std::setprecision(14) << c.q1_solver << " vs closed form "
                << c.q1_closed << '\n';
      ok = false;
    }
  std::size_t region_pairs = 0;
  for (int n = 10; n <= n_max; ++n)
    for (int w = 5; 2 * w < n + (n % 2); ++w) ++region_pairs;
  if (certs.size() != region_pairs) {
    std::cerr << "expected a certificate for each of " << region_pairs
              << " region pairs, found " << certs.size() << '\n';
    ok = false;
  }

  if (format == "csv") {
    sink.stream() << counterexample_csv_header() << '\n';
    for (const auto& c : certs) sink.stream() << to_csv_row(c) << '\n';
  } else if (format == "json") {
    for (const auto& c : certs) sink.stream() << to_json_line(c) << '\n';
  } else {
    sink.stream() << "Turan graphs exceeding the conjectured threshold 3n/2 + omega - 4\n";
    sink.stream() << std::fixed << std::setprecision(4);
    for (const auto& c : certs) {
      sink.stream() << "  T(" << c.n << "," << c.omega << ")  q1=" << c.q1_solver
                    << "  threshold=" << c.threshold << "  margin=+" << c.margin
                    << "  (q1-chi=" << c.q1_solver - c.omega << " > " << 1.5 * c.n - 4 << ")\n";
    }
    sink.stream().unsetf(std::ios_base::floatfield);
    if (certs.empty()) sink.stream() << "  none up to n=" << n_max << '\n';
  }
  return ok ? 0 : 1;
}

int run_table(Sink& sink) {
  example_table(sink.stream());
  return 0;
}

int run_zykov(const InputSource& src, Sink& sink) {
  const Graph g = src.load();
  const auto traj = zykov_trajectory(g);
  sink.stream() << std::fixed << std::setprecision(6);
  for (std::size_t i = 0; i < traj.graphs.size(); ++i)
    sink.stream() << "step " << i << "  q1=" << std::setw(11) << traj.q1_values[i] << "  "
                  << to_graph6(traj.graphs[i]) << '\n';
  sink.stream().unsetf(std::ios_base::floatfield);
  sink.stream() << "fixed point: complete multipartite, parts";
  for (int p : traj.part_sizes) sink.stream() << ' ' << p;
  sink.stream() << "  (" << traj.steps << " steps)\n";
  for (std::size_t i = 1; i < traj.q1_values.size(); ++i)
    if (traj.q1_values[i] < traj.q1_values[i - 1] - 1e-9) {
      std::cerr << "violation: q1 decreased from step " << i - 1 << " to " << i << '\n';
      return 1;
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signless Laplacian spectral radius toolkit"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string out_path;

  InputSource eval_src;
  auto* eval = app.add_subcommand("eval", "evaluate q1 and all bounds on one graph");
  add_input_options(eval, eval_src);
  eval->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "json"}));
  eval->add_option("--out", out_path, "write output to a file instead of stdout");

  std::string family_spec;
  std::string family_format = "g6";
  auto* family = app.add_subcommand("family", "construct a named graph family");
  family->add_option("spec", family_spec, "family spec, e.g. turan:10,3")->required();
  family->add_option("--format", family_format)->check(CLI::IsMember({"g6", "edges"}));
  family->add_option("--out", out_path);

  int sweep_n = 0;
  std::string sweep_check = "all";
  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "exhaustive verification over connected graphs");
  sweep->add_option("--n", sweep_n, "vertex count")->required();
  sweep->add_option("--check", sweep_check)
      ->check(CLI::IsMember({"upper", "lower", "region", "ratio", "all"}));
  sweep->add_flag("--dedup", sweep_opts.dedup, "one representative per isomorphism class");
  sweep->add_option("--workers", sweep_opts.workers, "worker threads (default: all cores)");
  sweep->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "json"}));
  sweep->add_option("--out", out_path);

  int n_max = 0;
  auto* cex = app.add_subcommand("counterexamples",
                                 "certificates that T(n,omega) crosses 3n/2 + omega - 4");
  cex->add_option("--n-max", n_max, "largest order to scan")->required()
      ->check(CLI::Range(1, 64));
  cex->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "json"}));
  cex->add_option("--out", out_path);

  auto* table = app.add_subcommand("table", "the two-row bound comparison table");
  table->add_option("--out", out_path);

  InputSource zykov_src;
  auto* zykov = app.add_subcommand("zykov", "duplication chain with its q1 trajectory");
  add_input_options(zykov, zykov_src);
  zykov->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const double tol = equality_tol_from_env();
    sweep_opts.eq_tol = tol;
    Sink sink;
    sink.open(out_path);
    if (eval->parsed()) return run_eval(eval_src, format, sink, tol);
    if (family->parsed()) return run_family(family_spec, family_format, sink);
    if (sweep->parsed()) return run_sweep(sweep_n, sweep_check, sweep_opts, format, sink);
    if (cex->parsed()) return run_counterexamples(n_max, format, sink);
    if (table->parsed()) return run_table(sink);
    if (zykov->parsed()) return run_zykov(zykov_src, sink);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
