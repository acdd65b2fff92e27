#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <sstream>

#include "beilc/errors.hpp"
#include "beilc/graph.hpp"

namespace beilc {

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> parse_uint(std::string_view tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<VertexSet> adjacency;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t lineno = idx + 1;
    auto toks = tokens(strip_comment(lines[idx]));
    if (toks.empty()) continue;
    if (!n) {
      if (toks.size() != 1) throw ParseError(lineno, "expected the vertex count n on its own line");
      n = parse_uint(toks[0]);
      if (!n || *n == 0) throw ParseError(lineno, "vertex count must be a positive integer");
      if (*n > kMaxVertices) {
        throw ParseError(lineno, "at most " + std::to_string(kMaxVertices) + " vertices are supported");
      }
      adjacency.assign(*n + 1, VertexSet{});
      continue;
    }
    if (toks.size() != 2) throw ParseError(lineno, "expected an edge \"i j\"");
    auto a = parse_uint(toks[0]);
    auto b = parse_uint(toks[1]);
    if (!a || !b) throw ParseError(lineno, "edge endpoints must be integers");
    for (std::size_t x : {*a, *b}) {
      if (x < 1 || x > *n) {
        throw ParseError(lineno, "vertex " + std::to_string(x) + " outside 1.." + std::to_string(*n));
      }
    }
    if (*a == *b) throw ParseError(lineno, "self-loop at vertex " + std::to_string(*a));
    auto u = static_cast<Vertex>(std::min(*a, *b));
    auto v = static_cast<Vertex>(std::max(*a, *b));
    if (adjacency[u].contains(v)) {
      throw ParseError(lineno, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    adjacency[u].insert(v);
    edges.push_back({u, v});
  }
  if (!n) throw ParseError(0, "empty input: expected the vertex count n");
  return Graph(*n, edges);
}

Graph parse_graph6(std::string_view text) {
  std::string_view body;
  std::size_t lineno = 0;
  auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    auto t = trim(lines[idx]);
    if (t.empty()) continue;
    if (!body.empty()) throw ParseError(idx + 1, "expected a single graph6 record");
    body = t;
    lineno = idx + 1;
  }
  if (body.empty()) throw ParseError(0, "empty input: expected a graph6 record");
  constexpr std::string_view header = ">>graph6<<";
  if (body.substr(0, header.size()) == header) body.remove_prefix(header.size());
  for (char c : body) {
    if (c < 63 || c > 126) throw ParseError(lineno, "invalid graph6 character");
  }
  if (body.empty()) throw ParseError(lineno, "truncated graph6 record");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (body[0] != 126) {
    n = static_cast<std::size_t>(body[0] - 63);
    pos = 1;
  } else {
    if (body.size() < 4 || body[1] == 126) throw ParseError(lineno, "unsupported graph6 size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(body[i] - 63);
    pos = 4;
  }
  if (n == 0) throw ParseError(lineno, "graph6 graph has no vertices");
  if (n > kMaxVertices) {
    throw ParseError(lineno, "at most " + std::to_string(kMaxVertices) + " vertices are supported");
  }
  const std::size_t bit_count = n * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (body.size() - pos != byte_count) throw ParseError(lineno, "graph6 record has the wrong length");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int chunk = body[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i + 1, j + 1});
    }
  }
  return Graph(n, edges);
}

}  // namespace

GraphFormat detect_format(std::string_view text) {
  for (auto line : split_lines(text)) {
    auto t = trim(strip_comment(line));
    if (t.empty()) continue;
    bool digits = std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    return digits ? GraphFormat::EdgeList : GraphFormat::Graph6;
  }
  return GraphFormat::EdgeList;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  try {
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.n();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(chunk + 63);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + 63);
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << '\n';
  for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace beilc
