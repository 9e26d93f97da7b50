#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homrep/graph.hpp"

namespace homrep {

/// A tree over arbitrary graph labels, hung from `root`, with the canonical
/// AHU code of every rooted subtree.
class RootedTree {
 public:
  /// Throws PreconditionError unless `edges` form a tree on exactly
  /// `vertices` and `root` is one of them.
  RootedTree(std::span<const Vertex> vertices, std::span<const Edge> edges, Vertex root);

  Vertex root() const noexcept { return root_; }
  std::size_t size() const noexcept { return labels_.size(); }

  /// Children of `v` ordered by (code, label).
  std::span<const Vertex> children(Vertex v) const { return children_[index(v)]; }
  Vertex parent(Vertex v) const { return parent_[index(v)]; }

  /// "()" for a leaf, otherwise "(" + sorted child codes + ")".
  const std::string& code(Vertex v) const { return codes_[index(v)]; }
  const std::string& code() const { return code(root_); }

  /// First vertex (in BFS order from the root) having two children with equal
  /// codes, together with that pair of children; absent when the tree has no
  /// non-trivial root-fixing automorphism.
  std::optional<std::pair<Vertex, std::pair<Vertex, Vertex>>> symmetric_siblings() const;

  /// Vertex pairs (a_i, b_i) of an isomorphism between the subtrees hanging
  /// from `a` and `b`, which must have equal codes.
  std::vector<std::pair<Vertex, Vertex>> subtree_isomorphism(Vertex a, Vertex b) const;

 private:
  std::size_t index(Vertex v) const;

  Vertex root_;
  std::vector<Vertex> labels_;
  std::unordered_map<Vertex, std::size_t> index_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::string> codes_;
  std::vector<Vertex> bfs_;
};

/// Canonical code of the subgraph of `g` induced by `vertices`, rooted at
/// `root`. Throws PreconditionError when the induced subgraph is not a tree.
std::string ahu_code(const Graph& g, std::span<const Vertex> vertices, Vertex root);

}  // namespace homrep
