#include "homrep/rooted_tree.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "homrep/errors.hpp"

namespace homrep {

RootedTree::RootedTree(std::span<const Vertex> vertices, std::span<const Edge> edges, Vertex root)
    : root_(root), labels_(vertices.begin(), vertices.end()) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) throw PreconditionError("repeated tree vertex");
  }
  if (!index_.contains(root)) throw PreconditionError("root is not a tree vertex");
  if (edges.size() + 1 != labels_.size()) throw PreconditionError("edge count does not match a tree");

  const std::size_t n = labels_.size();
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) {
    const auto a = index_.find(e.u);
    const auto b = index_.find(e.v);
    if (a == index_.end() || b == index_.end()) throw PreconditionError("edge leaves the vertex set");
    adj[a->second].push_back(e.v);
    adj[b->second].push_back(e.u);
  }

  parent_.assign(n, -1);
  children_.assign(n, {});
  std::vector<char> seen(n, 0);
  std::queue<Vertex> queue;
  queue.push(root);
  seen[index(root)] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    bfs_.push_back(v);
    for (Vertex w : adj[index(v)]) {
      const std::size_t iw = index(w);
      if (seen[iw]) {
        if (w != parent_[index(v)]) throw PreconditionError("subgraph contains a cycle");
        continue;
      }
      seen[iw] = 1;
      parent_[iw] = v;
      children_[index(v)].push_back(w);
      queue.push(w);
    }
  }
  if (bfs_.size() != n) throw PreconditionError("subgraph is not connected");

  codes_.assign(n, {});
  for (auto it = bfs_.rbegin(); it != bfs_.rend(); ++it) {
    auto& kids = children_[index(*it)];
    std::sort(kids.begin(), kids.end(), [this](Vertex a, Vertex b) {
      const auto& ca = codes_[index(a)];
      const auto& cb = codes_[index(b)];
      return ca != cb ? ca < cb : a < b;
    });
    std::string c = "(";
    for (Vertex k : kids) c += codes_[index(k)];
    c += ')';
    codes_[index(*it)] = std::move(c);
  }
}

std::size_t RootedTree::index(Vertex v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) throw PreconditionError("vertex " + std::to_string(v) + " is not in the tree");
  return it->second;
}

std::optional<std::pair<Vertex, std::pair<Vertex, Vertex>>> RootedTree::symmetric_siblings() const {
  for (Vertex v : bfs_) {
    const auto& kids = children_[index(v)];
    for (std::size_t i = 1; i < kids.size(); ++i) {
      if (code(kids[i - 1]) == code(kids[i])) return std::pair{v, std::pair{kids[i - 1], kids[i]}};
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> RootedTree::subtree_isomorphism(Vertex a, Vertex b) const {
  if (code(a) != code(b)) throw PreconditionError("subtrees are not isomorphic");
  std::vector<std::pair<Vertex, Vertex>> out;
  std::vector<std::pair<Vertex, Vertex>> stack{{a, b}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    out.emplace_back(x, y);
    // Children are sorted by code, so equal positions carry equal codes.
    const auto& cx = children_[index(x)];
    const auto& cy = children_[index(y)];
    for (std::size_t i = 0; i < cx.size(); ++i) stack.emplace_back(cx[i], cy[i]);
  }
  return out;
}

std::string ahu_code(const Graph& g, std::span<const Vertex> vertices, Vertex root) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : vertices) {
    if (!g.has_vertex(v)) throw PreconditionError("vertex out of range");
    in[v] = 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) edges.push_back(e);
  }
  if (edges.size() + 1 != vertices.size()) throw PreconditionError("induced subgraph is not a tree");
  return RootedTree(vertices, edges, root).code();
}

}  // namespace homrep
