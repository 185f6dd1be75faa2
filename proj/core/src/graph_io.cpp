#include "q1lab/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace q1lab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_sextets(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t base = 0; base < bits.size(); base += 6) {
    int v = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      v <<= 1;
      if (base + j < bits.size() && bits[base + j]) v |= 1;
    }
    out.push_back(static_cast<char>(63 + v));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  std::vector<bool> bits(static_cast<std::size_t>(n) * (n - 1) / 2, false);
  for (auto [u, v] : g.edges()) bits[static_cast<std::size_t>(edge_bit_index(u, v))] = true;
  append_sextets(out, bits);
  return out;
}

Graph from_graph6(std::string_view s) {
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.empty()) throw std::invalid_argument("graph6: empty string");

  auto sextet = [&](std::size_t i) -> int {
    if (i >= s.size()) throw std::invalid_argument("graph6: truncated input");
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
  };

  std::size_t pos = 0;
  long long n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
      throw std::invalid_argument("graph6: graphs beyond 64 vertices are unsupported");
    n = (static_cast<long long>(sextet(1)) << 12) | (sextet(2) << 6) | sextet(3);
    pos = 4;
  } else {
    n = sextet(0);
    pos = 1;
  }
  if (n < 1 || n > Graph::kMaxVertices)
    throw std::invalid_argument("graph6: vertex count " + std::to_string(n) +
                                " outside the supported [1, 64] range");

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nchars = (nbits + 5) / 6;
  if (s.size() != pos + nchars)
    throw std::invalid_argument("graph6: expected " + std::to_string(pos + nchars) +
                                " bytes, got " + std::to_string(s.size()));

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int v = sextet(pos + bit / 6);
      if ((v >> (5 - bit % 6)) & 1) {
        adj[static_cast<std::size_t>(i)] |= 1ull << j;
        adj[static_cast<std::size_t>(j)] |= 1ull << i;
      }
    }
  // padding bits past the triangle must be zero
  for (std::size_t b = nbits; b < nchars * 6; ++b)
    if ((sextet(pos + b / 6) >> (5 - b % 6)) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  return Graph::from_adjacency(std::move(adj));
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header line");
  if (m < 0) throw std::invalid_argument("edge list: negative edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, found only " + std::to_string(i));
    edges.emplace_back(u, v);
  }
  int extra;
  if (in >> extra) throw std::invalid_argument("edge list: trailing data after declared edges");
  return Graph::from_edge_list(n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_edge_list_text(buf.str());
}

}  // namespace q1lab
