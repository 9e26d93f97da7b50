#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "homrep/graph.hpp"
#include "homrep/matrix.hpp"

namespace homrep {

/// A simple closed walk stored as its cyclic dart sequence.
class OrientedCycle {
 public:
  /// Checks closure, length >= 3 and that no vertex repeats.
  explicit OrientedCycle(std::vector<Dart> darts);

  std::span<const Dart> darts() const noexcept { return darts_; }
  std::size_t length() const noexcept { return darts_.size(); }

  /// Tails of the darts, in walk order.
  std::vector<Vertex> vertices() const;

  OrientedCycle reversed() const;

  /// True when both describe the same oriented cycle, regardless of the
  /// starting dart.
  bool same_oriented(const OrientedCycle& other) const;

  friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;

 private:
  std::vector<Dart> darts_;
};

using HomologyVector = IntVector;

/// A spanning tree together with the ordered co-tree darts x_0..x_{b-1}
/// whose fundamental cycles form a basis of the cycle space.
class SpanningTreeBasis {
 public:
  /// Validates that `tree` is a spanning tree of `g`. Co-tree edges are
  /// ordered lexicographically and oriented from the smaller label.
  SpanningTreeBasis(Graph g, std::vector<Edge> tree, Vertex root = 0);

  const Graph& graph() const noexcept { return graph_; }
  Vertex root() const noexcept { return root_; }
  std::span<const Edge> tree_edges() const noexcept { return tree_; }
  std::span<const Dart> cotree() const noexcept { return cotree_; }
  int dimension() const noexcept { return static_cast<int>(cotree_.size()); }

  /// Tree parent of `v` (root maps to -1).
  Vertex parent(Vertex v) const { return parent_[v]; }

  /// Fundamental cycle of co-tree dart `i` (0-based).
  const OrientedCycle& cycle(int i) const;

  /// +(i+1) when d is x_i, -(i+1) when d is x_i^-1, 0 for tree darts.
  int cotree_index(const Dart& d) const {
    return dart_index_[static_cast<std::size_t>(d.tail) * graph_.order() + d.head];
  }

 private:
  Graph graph_;
  std::vector<Edge> tree_;
  std::vector<Dart> cotree_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<int> dart_index_;
  std::vector<OrientedCycle> cycles_;
};

/// Breadth-first tree from vertex 0, neighbours visited in increasing order.
SpanningTreeBasis spanning_tree_basis(const Graph& g);

/// Depth-first tree from a seeded random root with seeded random neighbour
/// order. The same seed always reproduces the same basis.
SpanningTreeBasis random_spanning_tree_basis(const Graph& g, std::uint64_t seed);

OrientedCycle fundamental_cycle(const SpanningTreeBasis& b, int i);

/// Signed count of each co-tree dart along `c`. Throws PreconditionError when
/// a dart of `c` is not a dart of the basis graph.
HomologyVector cycle_coordinates(const OrientedCycle& c, const SpanningTreeBasis& b);

}  // namespace homrep
