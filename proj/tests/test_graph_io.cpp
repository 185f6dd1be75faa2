#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "q1lab/families.hpp"
#include "q1lab/graph_io.hpp"

using namespace q1lab;

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(complete(2)) == "A_");
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(from_graph6("A_") == complete(2));
  CHECK(from_graph6("Bw") == complete(3));
  CHECK(from_graph6(">>graph6<<Bw") == complete(3));
}

TEST_CASE("graph6 round trip") {
  // every graph on up to 5 vertices
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t total = 1ull << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = from_edge_mask(n, mask);
      CHECK(from_graph6(to_graph6(g)) == g);
    }
  }
  // named families, including the long size form at n = 63 and 64
  for (const Graph& g : {turan(10, 3), kite(7, 4), complement_perfect_matching(8),
                         turan(63, 5), complete_bipartite(32, 32), path(64)}) {
    const std::string s = to_graph6(g);
    CHECK(from_graph6(s) == g);
  }
  CHECK(to_graph6(path(63)).substr(0, 1) == std::string(1, static_cast<char>(126)));
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("Bw~"), std::invalid_argument);        // trailing byte
  CHECK_THROWS_AS(from_graph6("B"), std::invalid_argument);          // truncated
  CHECK_THROWS_AS(from_graph6("B\x1f"), std::invalid_argument);      // byte below 63
  CHECK_THROWS_AS(from_graph6("Bz"), std::invalid_argument);         // nonzero padding
  CHECK_THROWS_AS(from_graph6("~~????"), std::invalid_argument);     // >64 vertices
  CHECK_THROWS_AS(from_graph6("?"), std::invalid_argument);          // n = 0
}

TEST_CASE("edge list text format") {
  const Graph g = kite(5, 3);
  const std::string text = to_edge_list_text(g);
  CHECK(text.substr(0, 4) == "5 5\n");
  CHECK(from_edge_list_text(text) == g);

  CHECK(from_edge_list_text("3 2\n0 1\n1 2\n") == path(3));
  CHECK(from_edge_list_text("1 0\n") == Graph::empty(1));

  CHECK_THROWS_AS(from_edge_list_text(""), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list_text("3 2\n0 1\n"), std::invalid_argument);      // missing edge
  CHECK_THROWS_AS(from_edge_list_text("3 1\n0 1\n1 2\n"), std::invalid_argument); // trailing data
  CHECK_THROWS_AS(from_edge_list_text("3 1\n1 1\n"), std::invalid_argument);      // self-loop
  CHECK_THROWS_AS(from_edge_list_text("3 1\n0 5\n"), std::invalid_argument);      // out of range
}

TEST_CASE("read_graph_file") {
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), std::invalid_argument);
}
