#include "q1lab/families.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace q1lab {

std::vector<int> turan_part_sizes(int n, int t) {
  if (t < 1 || t > n) throw std::invalid_argument("turan: need 1 <= t <= n");
  const int k = n / t, r = n % t;
  std::vector<int> sizes;
  sizes.reserve(static_cast<std::size_t>(t));
  for (int i = 0; i < r; ++i) sizes.push_back(k + 1);
  for (int i = r; i < t; ++i) sizes.push_back(k);
  return sizes;
}

Graph complete_multipartite(std::span<const int> sizes) {
  if (sizes.empty()) throw std::invalid_argument("complete_multipartite: no part sizes");
  long long n = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
    n += s;
  }
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("complete_multipartite exceeds the 64-vertex envelope");
  Graph g = Graph::empty(sizes[0]);
  for (std::size_t i = 1; i < sizes.size(); ++i) g = join(g, Graph::empty(sizes[i]));
  return g;
}

Graph complete_multipartite(std::initializer_list<int> sizes) {
  return complete_multipartite(std::span<const int>(sizes.begin(), sizes.size()));
}

Graph turan(int n, int t) {
  const auto sizes = turan_part_sizes(n, t);
  return complete_multipartite(sizes);
}

Graph kite(int n, int w) {
  if (w < 2 || w > n) throw std::invalid_argument("kite: need 2 <= w <= n");
  if (n > Graph::kMaxVertices) throw std::invalid_argument("kite exceeds the 64-vertex envelope");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < w; ++i)
    for (int j = i + 1; j < w; ++j) edges.emplace_back(i, j);
  // bridge from clique vertex w-1, then the tail path
  for (int v = w; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edge_list(n, edges);
}

Graph path(int n) { return n == 1 ? Graph::empty(1) : kite(n, 2); }

Graph complete(int n) { return n == 1 ? Graph::empty(1) : kite(n, n); }

Graph empty_graph(int n) { return Graph::empty(n); }

Graph complete_bipartite(int p, int q) { return complete_multipartite({p, q}); }

Graph complement_perfect_matching(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("complement_perfect_matching: n must be even and >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n / 2; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return complement(Graph::from_edge_list(n, edges));
}

Graph cpm_plus_triangle(int n) {
  if (n < 5 || n % 2 != 1)
    throw std::invalid_argument("cpm_plus_triangle: n must be odd and >= 5");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < (n - 3) / 2; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  edges.emplace_back(n - 3, n - 2);
  edges.emplace_back(n - 3, n - 1);
  edges.emplace_back(n - 2, n - 1);
  return complement(Graph::from_edge_list(n, edges));
}

namespace {

std::vector<int> parse_params(std::string_view text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int value;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("family: bad integer parameter '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("family: bad integer parameter '" + token + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("family: missing parameters");
  return out;
}

void need_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count)
    throw std::invalid_argument("family " + spec.name() + ": expected " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(spec.params.size()));
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("family: expected 'name:params', got '" + std::string(text) + "'");
  const std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  if (name == "turan") spec.kind = FamilyKind::turan;
  else if (name == "multipartite") spec.kind = FamilyKind::complete_multipartite;
  else if (name == "kite") spec.kind = FamilyKind::kite;
  else if (name == "path") spec.kind = FamilyKind::path;
  else if (name == "kpq") spec.kind = FamilyKind::complete_bipartite;
  else if (name == "complete") spec.kind = FamilyKind::complete;
  else if (name == "empty") spec.kind = FamilyKind::empty_graph;
  else if (name == "cpm") spec.kind = FamilyKind::complement_perfect_matching;
  else if (name == "cpmtri") spec.kind = FamilyKind::cpm_plus_triangle;
  else throw std::invalid_argument("family: unknown kind '" + std::string(name) + "'");
  spec.params = parse_params(text.substr(colon + 1));
  return spec;
}

Graph FamilySpec::build() const {
  switch (kind) {
    case FamilyKind::turan:
      need_params(*this, 2);
      return turan(params[0], params[1]);
    case FamilyKind::complete_multipartite:
      return complete_multipartite(std::span<const int>(params.data(), params.size()));
    case FamilyKind::kite:
      need_params(*this, 2);
      return kite(params[0], params[1]);
    case FamilyKind::path:
      need_params(*this, 1);
      return path(params[0]);
    case FamilyKind::complete_bipartite:
      need_params(*this, 2);
      return complete_bipartite(params[0], params[1]);
    case FamilyKind::complete:
      need_params(*this, 1);
      return complete(params[0]);
    case FamilyKind::empty_graph:
      need_params(*this, 1);
      return empty_graph(params[0]);
    case FamilyKind::complement_perfect_matching:
      need_params(*this, 1);
      return complement_perfect_matching(params[0]);
    case FamilyKind::cpm_plus_triangle:
      need_params(*this, 1);
      return cpm_plus_triangle(params[0]);
  }
  throw std::logic_error("unreachable family kind");
}

std::string FamilySpec::name() const {
  std::string base;
  switch (kind) {
    case FamilyKind::turan: base = "turan"; break;
    case FamilyKind::complete_multipartite: base = "multipartite"; break;
    case FamilyKind::kite: base = "kite"; break;
    case FamilyKind::path: base = "path"; break;
    case FamilyKind::complete_bipartite: base = "kpq"; break;
    case FamilyKind::complete: base = "complete"; break;
    case FamilyKind::empty_graph: base = "empty"; break;
    case FamilyKind::complement_perfect_matching: base = "cpm"; break;
    case FamilyKind::cpm_plus_triangle: base = "cpmtri"; break;
  }
  base.push_back(':');
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) base.push_back(',');
    base += std::to_string(params[i]);
  }
  return base;
}

std::optional<int> FamilySpec::known_clique() const {
  switch (kind) {
    case FamilyKind::turan: return params.size() == 2 ? std::optional<int>(params[1]) : std::nullopt;
    case FamilyKind::complete_multipartite: return static_cast<int>(params.size());
    case FamilyKind::kite: return params.size() == 2 ? std::optional<int>(params[1]) : std::nullopt;
    case FamilyKind::path: return params.at(0) >= 2 ? 2 : 1;
    case FamilyKind::complete_bipartite: return 2;
    case FamilyKind::complete: return params.at(0);
    case FamilyKind::empty_graph: return 1;
    case FamilyKind::complement_perfect_matching: return params.at(0) / 2;
    case FamilyKind::cpm_plus_triangle: return (params.at(0) - 3) / 2 + 1;
  }
  return std::nullopt;
}

std::optional<int> FamilySpec::known_chromatic() const {
  // every kind here is either complete multipartite (chi = #parts) or a
  // kite/path (chi = clique number)
  return known_clique();
}

}  // namespace q1lab
