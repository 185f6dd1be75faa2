#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "q1lab/families.hpp"
#include "q1lab/graph_io.hpp"
#include "q1lab/verify.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(Q1LAB_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

using namespace q1lab;

TEST_CASE("table subcommand reproduces the comparison rows") {
  const auto r = run_cli("table");
  CHECK(r.exit_code == 0);
  for (const char* v : {"13.2915", "13.7082", "13.6119", "13.6667", "13.5826",
                        "8.7417", "9.2749", "9.5826", "9.4462", "9.6667", "8.8284"})
    CHECK(r.output.find(v) != std::string::npos);
}

TEST_CASE("eval by family, graph6, and edge list") {
  const auto json = run_cli("eval --family turan:10,3 --format json");
  CHECK(json.exit_code == 0);
  const auto j = nlohmann::json::parse(json.output);
  CHECK(j["omega"] == 3);
  CHECK(std::abs(j["q1"].get<double>() - 13.2915) <= 5e-4);
  CHECK(j["bounds"]["b5"]["attained"] == true);

  const auto k2 = run_cli("eval --graph6 A_ --format json");
  CHECK(k2.exit_code == 0);
  CHECK(std::abs(nlohmann::json::parse(k2.output)["q1"].get<double>() - 2.0) <= 1e-9);

  // edge-list file input: the second comparison graph
  const std::string path = "/tmp/q1lab_test_g2.txt";
  std::ofstream(path) << to_edge_list_text(join(Graph::empty(3), q1lab::path(4)));
  const auto file = run_cli("eval --edges " + path + " --format csv");
  CHECK(file.exit_code == 0);
  CHECK(file.output.find("n,m,omega,chi,q1,b5,b13,b14,b15,b16,lb") == 0);
  CHECK(file.output.find("7,15,3,3,") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("eval warns but proceeds on disconnected input") {
  // two triangles: bounds become n/a but q1 is still reported
  const std::string g6 = to_graph6(disjoint_union(complete(3), complete(3)));
  const auto r = run_cli("eval --graph6 '" + g6 + "' --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["connected"] == false);
  CHECK(j["bounds"]["b5"].is_null());
}

TEST_CASE("family emits graph6 and edge lists that round-trip") {
  const auto g6 = run_cli("family kite:7,4 --format g6");
  CHECK(g6.exit_code == 0);
  std::string token = g6.output;
  while (!token.empty() && (token.back() == '\n' || token.back() == '\r')) token.pop_back();
  const Graph parsed = from_graph6(token);
  CHECK(parsed.edge_count() == 9);
  CHECK(parsed == kite(7, 4));

  const auto edges = run_cli("family turan:6,3 --format edges");
  CHECK(edges.exit_code == 0);
  CHECK(from_edge_list_text(edges.output) == turan(6, 3));
}

TEST_CASE("sweep subcommand exit codes") {
  const auto ok = run_cli("sweep --n 5 --check upper --format json");
  CHECK(ok.exit_code == 0);
  const auto j = nlohmann::json::parse(ok.output);
  CHECK(j["ok"] == true);
  CHECK(j["check"] == "upper");

  // below the region hypothesis the sweep reports a genuine witness
  const auto fail = run_cli("sweep --n 4 --check region");
  CHECK(fail.exit_code == 1);

  const auto family = run_cli("sweep --n 12 --check region");
  CHECK(family.exit_code == 0);

  const auto bad = run_cli("sweep --n 12 --check upper");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("counterexamples subcommand") {
  const auto csv = run_cli("counterexamples --n-max 14 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("11,5,3+2+2+2+2,") != std::string::npos);
  CHECK(csv.output.find("14,6,") != std::string::npos);

  const auto none = run_cli("counterexamples --n-max 9");
  CHECK(none.exit_code == 0);
  CHECK(none.output.find("none up to n=9") != std::string::npos);
}

TEST_CASE("zykov subcommand prints a monotone trajectory") {
  const auto r = run_cli("zykov --family kite:5,3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("step 0") != std::string::npos);
  CHECK(r.output.find("fixed point: complete multipartite") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("eval").exit_code == 2);                          // no input source
  CHECK(run_cli("eval --graph6 '##'").exit_code == 2);            // malformed graph6
  CHECK(run_cli("eval --edges /nonexistent_file").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("family nosuch:1").exit_code == 2);
  CHECK(run_cli("sweep").exit_code == 2);                         // missing --n
  CHECK(run_cli("counterexamples --n-max 200").exit_code == 2);   // out of range
  CHECK(run_cli("eval --graph6 A_ --family path:3").exit_code == 2);  // two sources
}

TEST_CASE("Q1LAB_EQ_TOL widens the equality band") {
  // with a huge tolerance every upper bound on the Turan row reads as attained
  const auto r = run_cli("eval --family turan:10,3 --format json", "Q1LAB_EQ_TOL=0.5");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["bounds"]["b13"]["attained"] == true);

  const auto strict = run_cli("eval --family turan:10,3 --format json");
  CHECK(nlohmann::json::parse(strict.output)["bounds"]["b13"]["attained"] == false);

  CHECK(run_cli("eval --graph6 A_", "Q1LAB_EQ_TOL=banana").exit_code == 2);
}

TEST_CASE("--out writes to a file") {
  const std::string path = "/tmp/q1lab_test_out.txt";
  const auto r = run_cli("table --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("13.2915") != std::string::npos);
  std::remove(path.c_str());
}
