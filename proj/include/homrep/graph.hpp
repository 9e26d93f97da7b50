#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homrep {

using Vertex = int;

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// An edge with a chosen orientation.
struct Dart {
  Vertex tail = 0;
  Vertex head = 0;

  Dart inverse() const { return {head, tail}; }
  Edge edge() const { return {tail, head}; }

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on self-loops or out-of-range endpoints.
  /// Duplicate edges collapse.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Edges in lexicographic order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Neighbours of `v` in increasing label order.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_list_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_list_[v].size()); }

  bool adjacent(Vertex a, Vertex b) const {
    return adj_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }
  bool has_dart(const Dart& d) const {
    return has_vertex(d.tail) && has_vertex(d.head) && adjacent(d.tail, d.head);
  }

  /// Both orientations of every edge.
  std::vector<Dart> darts() const;

  /// Subgraph induced by `vertices`, relabelled in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_list_;
  std::vector<std::uint8_t> adj_;
};

/// Parses "u v" lines; '#' starts a comment line; an optional "n <count>"
/// header fixes the vertex count (otherwise 1 + max label).
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: header line followed by one edge per line.
std::string to_edge_list(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

bool is_connected(const Graph& g);

/// Throws PreconditionError unless `g` is non-empty and connected.
void require_connected(const Graph& g);

/// Betti number e - v + 1 of a connected graph.
int betti(const Graph& g);

/// Streams every labelled connected simple graph on n vertices (2 <= n <= 6)
/// exactly once. Edge subsets are visited in increasing bitmask order, where
/// bit i selects the i-th pair of the lexicographic pair list
/// (0,1), (0,2), ..., (n-2,n-1).
class ConnectedGraphEnumerator {
 public:
  static constexpr int kMinOrder = 2;
  static constexpr int kMaxOrder = 6;

  explicit ConnectedGraphEnumerator(int n);

  std::optional<Graph> next();

 private:
  int n_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
};

/// All graphs produced by ConnectedGraphEnumerator(n), in order.
std::vector<Graph> enumerate_connected_graphs(int n);

}  // namespace homrep
