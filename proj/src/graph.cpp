#include "homrep/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "homrep/errors.hpp"

namespace homrep {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= n) {
      throw PreconditionError("edge endpoint out of range: " +
                              std::to_string(e.u) + " " + std::to_string(e.v));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adj_list_.assign(n, {});
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : edges_) {
    adj_list_[e.u].push_back(e.v);
    adj_list_[e.v].push_back(e.u);
    adj_[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    adj_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
  }
  for (auto& nb : adj_list_) std::sort(nb.begin(), nb.end());
}

std::vector<Dart> Graph::darts() const {
  std::vector<Dart> out;
  out.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    out.push_back({e.u, e.v});
    out.push_back({e.v, e.u});
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!has_vertex(vertices[i])) throw PreconditionError("vertex out of range");
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> sub;
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) sub.emplace_back(index[e.u], index[e.v]);
  }
  return Graph(static_cast<int>(vertices.size()), std::move(sub));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_label(std::string_view token, std::size_t line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError("malformed token '" + std::string(token) + "'", line);
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> header;
  std::vector<Edge> edges;
  int max_label = -1;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError("expected two fields, got " + std::to_string(tokens.size()), line_no);
    }
    if (tokens[0] == "n") {
      if (header) throw ParseError("duplicate vertex-count header", line_no);
      header = parse_label(tokens[1], line_no);
      continue;
    }
    const int u = parse_label(tokens[0], line_no);
    const int v = parse_label(tokens[1], line_no);
    if (u == v) throw ParseError("self-loop " + std::to_string(u) + " " + std::to_string(v), line_no);
    max_label = std::max({max_label, u, v});
    edges.emplace_back(u, v);
  }
  const int n = header.value_or(max_label + 1);
  if (n <= 0) throw ParseError("graph has no vertices");
  if (max_label >= n) {
    throw ParseError("label " + std::to_string(max_label) + " exceeds header count " +
                     std::to_string(n));
  }
  return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// graph6: N(n) header followed by the upper triangle x(0,1) x(0,2) x(1,2)
// x(0,3) ... packed six bits per byte, most significant first, offset by 63.
Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
  }
  auto six = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i] - 63); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = six(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw ParseError("truncated graph6 header");
    n = (six(1) << 12) | (six(2) << 6) | six(3);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("truncated graph6 header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | six(i);
    pos = 8;
  }
  if (n > 100000) throw ParseError("graph6 order too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("truncated graph6 adjacency section");
  if (text.size() - pos > bytes) throw ParseError("trailing characters after graph6 data");

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const auto byte = six(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append(2, 126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

void require_connected(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("graph has no vertices");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
}

int betti(const Graph& g) {
  require_connected(g);
  return static_cast<int>(g.size()) - g.order() + 1;
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n) : n_(n) {
  if (n < kMinOrder || n > kMaxOrder) {
    throw PreconditionError("enumeration supports 2 <= n <= 6, got " + std::to_string(n));
  }
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  }
  std::sort(pairs_.begin(), pairs_.end());
  end_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
  // A connected graph needs at least n - 1 edges, so small masks are cheap to skip.
  while (++mask_ < end_) {
    if (std::popcount(mask_) < n_ - 1) continue;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs_.size(); ++b) {
      if ((mask_ >> b) & 1U) edges.push_back(pairs_[b]);
    }
    Graph g(n_, std::move(edges));
    if (is_connected(g)) return g;
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  ConnectedGraphEnumerator it(n);
  std::vector<Graph> out;
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace homrep
