#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homrep/automorphism.hpp"
#include "homrep/graph.hpp"

namespace homrep {

/// A rooted tree as a parent list: parent[0] == -1 (the root) and
/// 0 <= parent[i] < i for every other vertex.
class RootedTreeSpec {
 public:
  explicit RootedTreeSpec(std::vector<int> parent);

  /// Parses "[-1,0,0,1]" (brackets and whitespace optional).
  static RootedTreeSpec parse(std::string_view text);

  std::span<const int> parent() const noexcept { return parent_; }
  int size() const noexcept { return static_cast<int>(parent_.size()); }

  std::string to_string() const;

 private:
  std::vector<int> parent_;
};

/// Uniform size in 1..max_vertices, each non-root vertex attached to a
/// uniformly chosen earlier vertex.
RootedTreeSpec random_rooted_tree(int max_vertices, std::mt19937_64& rng);

struct PeriodicUnicyclic {
  Graph graph;
  /// v_j -> v_{j+k}, extended over the attached tree copies.
  Automorphism rotation;
};

/// Cycle 0..n-1 with a copy of specs[j mod k] hung from every v_j. Cycle
/// vertices come first, then the tree copies in j order, each copy in spec
/// order. Requires n > 2, k | n, k < n and k specs.
PeriodicUnicyclic build_periodic_unicyclic(int n, int k, const std::vector<RootedTreeSpec>& specs);

/// "cycle" C_size, "complete" K_size, "star" K_{1,size} centred at 0,
/// "path" on size vertices, "bowtie" a chain of size triangles where
/// triangle i is (2i, 2i+1, 2i+2).
Graph named_family(std::string_view name, int size);

}  // namespace homrep
