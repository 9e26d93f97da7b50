#include "homrep/cycle_space.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <string>

#include "homrep/errors.hpp"

namespace homrep {

OrientedCycle::OrientedCycle(std::vector<Dart> darts) : darts_(std::move(darts)) {
  const std::size_t k = darts_.size();
  if (k < 3) throw PreconditionError("a simple cycle needs at least three darts");
  std::set<Vertex> tails;
  for (std::size_t j = 0; j < k; ++j) {
    if (darts_[j].head != darts_[(j + 1) % k].tail) {
      throw PreconditionError("dart sequence is not a closed walk");
    }
    if (!tails.insert(darts_[j].tail).second) {
      throw PreconditionError("cycle visits vertex " + std::to_string(darts_[j].tail) + " twice");
    }
  }
}

std::vector<Vertex> OrientedCycle::vertices() const {
  std::vector<Vertex> out;
  out.reserve(darts_.size());
  for (const Dart& d : darts_) out.push_back(d.tail);
  return out;
}

OrientedCycle OrientedCycle::reversed() const {
  std::vector<Dart> rev;
  rev.reserve(darts_.size());
  for (auto it = darts_.rbegin(); it != darts_.rend(); ++it) rev.push_back(it->inverse());
  return OrientedCycle(std::move(rev));
}

bool OrientedCycle::same_oriented(const OrientedCycle& other) const {
  if (other.length() != length()) return false;
  const auto start = std::find(other.darts_.begin(), other.darts_.end(), darts_.front());
  if (start == other.darts_.end()) return false;
  const auto offset = static_cast<std::size_t>(start - other.darts_.begin());
  for (std::size_t j = 0; j < length(); ++j) {
    if (darts_[j] != other.darts_[(j + offset) % length()]) return false;
  }
  return true;
}

SpanningTreeBasis::SpanningTreeBasis(Graph g, std::vector<Edge> tree, Vertex root)
    : graph_(std::move(g)), tree_(std::move(tree)), root_(root) {
  require_connected(graph_);
  const int n = graph_.order();
  if (!graph_.has_vertex(root)) throw PreconditionError("root is not a vertex");

  std::sort(tree_.begin(), tree_.end());
  tree_.erase(std::unique(tree_.begin(), tree_.end()), tree_.end());
  if (static_cast<int>(tree_.size()) != n - 1) {
    throw PreconditionError("a spanning tree on " + std::to_string(n) + " vertices needs " +
                            std::to_string(n - 1) + " edges");
  }
  std::vector<std::vector<Vertex>> tree_adj(n);
  for (const Edge& e : tree_) {
    if (!graph_.has_vertex(e.u) || !graph_.has_vertex(e.v) || !graph_.adjacent(e.u, e.v)) {
      throw PreconditionError("tree edge is not an edge of the graph");
    }
    tree_adj[e.u].push_back(e.v);
    tree_adj[e.v].push_back(e.u);
  }

  parent_.assign(n, -1);
  depth_.assign(n, -1);
  depth_[root] = 0;
  std::queue<Vertex> queue;
  queue.push(root);
  int reached = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : tree_adj[v]) {
      if (depth_[w] >= 0) continue;
      depth_[w] = depth_[v] + 1;
      parent_[w] = v;
      ++reached;
      queue.push(w);
    }
  }
  if (reached != n) throw PreconditionError("tree edges do not span the graph");

  for (const Edge& e : graph_.edges()) {
    if (!std::binary_search(tree_.begin(), tree_.end(), e)) cotree_.push_back({e.u, e.v});
  }

  dart_index_.assign(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t i = 0; i < cotree_.size(); ++i) {
    const Dart& x = cotree_[i];
    dart_index_[static_cast<std::size_t>(x.tail) * n + x.head] = static_cast<int>(i) + 1;
    dart_index_[static_cast<std::size_t>(x.head) * n + x.tail] = -static_cast<int>(i) - 1;
  }

  // C_i = x_i followed by the tree path from head(x_i) back to tail(x_i).
  cycles_.reserve(cotree_.size());
  for (const Dart& x : cotree_) {
    std::vector<Dart> up;
    std::vector<Dart> down;
    Vertex a = x.head;
    Vertex b = x.tail;
    while (a != b) {
      if (depth_[a] >= depth_[b]) {
        up.push_back({a, parent_[a]});
        a = parent_[a];
      } else {
        down.push_back({parent_[b], b});
        b = parent_[b];
      }
    }
    std::vector<Dart> darts{x};
    darts.insert(darts.end(), up.begin(), up.end());
    darts.insert(darts.end(), down.rbegin(), down.rend());
    cycles_.emplace_back(std::move(darts));
  }
}

const OrientedCycle& SpanningTreeBasis::cycle(int i) const {
  if (i < 0 || i >= dimension()) {
    throw PreconditionError("cycle index " + std::to_string(i) + " out of range for dimension " +
                            std::to_string(dimension()));
  }
  return cycles_[i];
}

SpanningTreeBasis spanning_tree_basis(const Graph& g) {
  require_connected(g);
  std::vector<char> seen(g.order(), 0);
  std::vector<Edge> tree;
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      tree.emplace_back(v, w);
      queue.push(w);
    }
  }
  return SpanningTreeBasis(g, std::move(tree), 0);
}

SpanningTreeBasis random_spanning_tree_basis(const Graph& g, std::uint64_t seed) {
  require_connected(g);
  std::mt19937_64 rng(seed);
  // Explicit Fisher-Yates: std::shuffle is not reproducible across standard libraries.
  auto shuffled = [&rng](std::span<const Vertex> in) {
    std::vector<Vertex> v(in.begin(), in.end());
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
    return v;
  };

  const auto root = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.order()));
  std::vector<char> seen(g.order(), 0);
  std::vector<Edge> tree;
  struct Frame {
    Vertex v;
    std::vector<Vertex> order;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  seen[root] = 1;
  stack.push_back({root, shuffled(g.neighbors(root))});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.order.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex w = top.order[top.next++];
    if (seen[w]) continue;
    seen[w] = 1;
    tree.emplace_back(top.v, w);
    stack.push_back({w, shuffled(g.neighbors(w))});
  }
  return SpanningTreeBasis(g, std::move(tree), root);
}

OrientedCycle fundamental_cycle(const SpanningTreeBasis& b, int i) { return b.cycle(i); }

HomologyVector cycle_coordinates(const OrientedCycle& c, const SpanningTreeBasis& b) {
  HomologyVector coords = HomologyVector::Zero(b.dimension());
  for (const Dart& d : c.darts()) {
    if (!b.graph().has_dart(d)) {
      throw PreconditionError("dart (" + std::to_string(d.tail) + "," + std::to_string(d.head) +
                              ") is not in the graph");
    }
    const int idx = b.cotree_index(d);
    if (idx > 0) coords(idx - 1) += 1;
    if (idx < 0) coords(-idx - 1) -= 1;
  }
  return coords;
}

}  // namespace homrep
