#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "homrep/automorphism.hpp"
#include "homrep/graph.hpp"

namespace homrep {

enum class Reason { kFaithful, kTreeWithSymmetry, kSymmetricPendantTree, kPeriodicUnicyclic };

std::string to_string(Reason r);

/// Whether the homology representation is injective, and why not.
struct Verdict {
  bool faithful = true;
  Reason reason = Reason::kFaithful;
  /// Pendant-tree root for kSymmetricPendantTree.
  std::optional<Vertex> root;
  /// Rotation period for kPeriodicUnicyclic.
  std::optional<int> period;

  static Verdict faithful_verdict() { return {}; }
  static Verdict tree_with_symmetry() { return {false, Reason::kTreeWithSymmetry, {}, {}}; }
  static Verdict symmetric_pendant_tree(Vertex w) { return {false, Reason::kSymmetricPendantTree, w, {}}; }
  static Verdict periodic_unicyclic(int k) { return {false, Reason::kPeriodicUnicyclic, {}, k}; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Structural decision, checked in the order: symmetric tree, non-rigid
/// pendant tree (smallest root), periodic unicyclic. Only the tree case
/// searches for automorphisms, and it stops at the first non-identity one.
Verdict classify(const Graph& g);

/// Shortcut for graphs without vertices of degree one: faithful unless the
/// graph is a simple cycle. Absent when g has a leaf.
std::optional<Verdict> classify_fast_2edge(const Graph& g);

/// True when g is connected and 2-regular.
bool is_simple_cycle(const Graph& g);

/// A non-identity kernel element certifying a non-faithful verdict:
/// the first non-trivial automorphism for a tree, a subtree swap for a
/// symmetric pendant tree, the rotation by the period for a periodic
/// unicyclic graph. Absent for faithful verdicts.
std::optional<Automorphism> witness(const Graph& g, const Verdict& v);

/// {"faithful": bool, "reason": string, "witness": {"root"|"period": int}}
nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace homrep
