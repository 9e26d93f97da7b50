#pragma once

#include <optional>
#include <vector>

#include "json.hpp"

#include "homrep/cycle_space.hpp"
#include "homrep/graph.hpp"

namespace homrep {

struct BlockDecomposition {
  /// Vertex sets of the blocks, each sorted; K2 bridge blocks included.
  /// Blocks are listed in lexicographic order.
  std::vector<std::vector<Vertex>> blocks;
  /// Vertices lying in two or more blocks, sorted.
  std::vector<Vertex> cutvertices;
  /// Edges forming a block on their own, sorted.
  std::vector<Edge> bridges;

  /// A block with at least three vertices.
  bool is_nontrivial(std::size_t block) const { return blocks[block].size() >= 3; }
};

/// Biconnected components by the depth-first lowpoint method. A graph with
/// fewer than two vertices yields an empty decomposition.
BlockDecomposition block_decomposition(const Graph& g);

/// Bipartite incidence tree of blocks and cutvertices.
struct BlockTree {
  struct Node {
    enum class Kind { kBlock, kCut };
    Kind kind;
    /// Block index into the decomposition, or the cutvertex label.
    int id;
  };
  /// Blocks first (in decomposition order), then cutvertices in label order.
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> edges;
  int centre = -1;
};

/// Throws InvariantError if the centre is not a single node.
BlockTree block_tree(const BlockDecomposition& d);

/// Components left after deleting every bridge, sorted by smallest vertex.
std::vector<std::vector<Vertex>> two_edge_connected_components(const Graph& g);

/// Vertices surviving repeated removal of vertices of degree at most one.
std::vector<Vertex> two_core(const Graph& g);

struct PendantTree {
  Vertex root;
  /// Sorted, includes the root.
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

/// For every vertex w of the 2-core incident to a bridge that leads away from
/// the core: w together with all acyclic components of g - w joined to w by a
/// single edge. Requires betti(g) >= 1; roots are emitted in label order.
std::vector<PendantTree> pendant_trees(const Graph& g);

/// No non-trivial automorphism of the tree fixes its root.
bool is_rigid_pendant_tree(const PendantTree& s);

/// The cycle of a unicyclic graph, starting at its smallest vertex and
/// heading to the smaller of that vertex's two cycle neighbours.
OrientedCycle unique_cycle(const Graph& g);

struct Periodicity {
  bool periodic = false;
  /// Minimal rotation period of the hanging-tree code word; set only when
  /// periodic.
  std::optional<int> period;
};

Periodicity is_periodic_unicyclic(const Graph& g);

nlohmann::json block_tree_to_json(const BlockDecomposition& d, const BlockTree& t);

}  // namespace homrep
