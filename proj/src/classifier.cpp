#include "homrep/classifier.hpp"

#include <numeric>

#include "homrep/blocks.hpp"
#include "homrep/errors.hpp"
#include "homrep/rooted_tree.hpp"

namespace homrep {

std::string to_string(Reason r) {
  switch (r) {
    case Reason::kFaithful:
      return "Faithful";
    case Reason::kTreeWithSymmetry:
      return "TreeWithSymmetry";
    case Reason::kSymmetricPendantTree:
      return "SymmetricPendantTree";
    case Reason::kPeriodicUnicyclic:
      return "PeriodicUnicyclic";
  }
  return "?";
}

Verdict classify(const Graph& g) {
  const int b = betti(g);
  if (b == 0) {
    return has_nontrivial_automorphism(g) ? Verdict::tree_with_symmetry() : Verdict::faithful_verdict();
  }
  for (const PendantTree& s : pendant_trees(g)) {
    if (!is_rigid_pendant_tree(s)) return Verdict::symmetric_pendant_tree(s.root);
  }
  if (const auto p = is_periodic_unicyclic(g); p.periodic) return Verdict::periodic_unicyclic(*p.period);
  return Verdict::faithful_verdict();
}

bool is_simple_cycle(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

std::optional<Verdict> classify_fast_2edge(const Graph& g) {
  require_connected(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) return std::nullopt;
  }
  return is_simple_cycle(g) ? Verdict::periodic_unicyclic(1) : Verdict::faithful_verdict();
}

std::optional<Automorphism> witness(const Graph& g, const Verdict& v) {
  switch (v.reason) {
    case Reason::kFaithful:
      return std::nullopt;
    case Reason::kTreeWithSymmetry: {
      std::optional<Automorphism> found;
      for_each_automorphism(g, [&](const Automorphism& f) {
        if (!f.is_identity()) found = f;
        return !found;
      });
      return found;
    }
    case Reason::kSymmetricPendantTree: {
      for (const PendantTree& s : pendant_trees(g)) {
        if (s.root != v.root) continue;
        const RootedTree tree(s.vertices, s.edges, s.root);
        const auto sib = tree.symmetric_siblings();
        if (!sib) break;
        auto perm = Automorphism::identity(g.order());
        std::vector<Vertex> p(perm.perm().begin(), perm.perm().end());
        for (const auto& [a, b] : tree.subtree_isomorphism(sib->second.first, sib->second.second)) {
          p[a] = b;
          p[b] = a;
        }
        return Automorphism(std::move(p));
      }
      throw PreconditionError("verdict root does not carry a symmetric pendant tree");
    }
    case Reason::kPeriodicUnicyclic: {
      // Rotation of the cycle by `period`, carried onto the hanging trees by
      // the canonical isomorphisms between equal-coded trees.
      const auto ring = unique_cycle(g).vertices();
      const std::size_t len = ring.size();
      const auto k = static_cast<std::size_t>(*v.period);
      std::vector<Edge> rest;
      for (const Edge& e : g.edges()) {
        bool on_cycle = false;
        for (std::size_t j = 0; j < len && !on_cycle; ++j) on_cycle = e == Edge(ring[j], ring[(j + 1) % len]);
        if (!on_cycle) rest.push_back(e);
      }
      // One forest holding every hanging tree, joined under a virtual root so
      // that subtree_isomorphism can pair trees from different cycle vertices.
      const Vertex hub = g.order();
      rest.reserve(rest.size() + len);
      for (Vertex r : ring) rest.emplace_back(r, hub);
      std::vector<Vertex> all(g.order() + 1);
      std::iota(all.begin(), all.end(), 0);
      const RootedTree forest(all, rest, hub);
      std::vector<Vertex> p(g.order());
      for (std::size_t j = 0; j < len; ++j) {
        for (const auto& [a, b] : forest.subtree_isomorphism(ring[j], ring[(j + k) % len])) p[a] = b;
      }
      return Automorphism(std::move(p));
    }
  }
  return std::nullopt;
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json out = {{"faithful", v.faithful}, {"reason", to_string(v.reason)}};
  if (v.root) out["witness"] = {{"root", *v.root}};
  if (v.period) out["witness"] = {{"period", *v.period}};
  return out;
}

}  // namespace homrep
