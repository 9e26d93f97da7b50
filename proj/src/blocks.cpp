#include "homrep/blocks.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "homrep/errors.hpp"
#include "homrep/rooted_tree.hpp"

namespace homrep {

BlockDecomposition block_decomposition(const Graph& g) {
  BlockDecomposition d;
  const int n = g.order();
  if (n < 2) return d;
  require_connected(g);

  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Vertex> stack{0};
  int time = 0;
  disc[0] = low[0] = time++;

  while (!stack.empty()) {
    const Vertex v = stack.back();
    const auto nb = g.neighbors(v);
    if (next[v] < nb.size()) {
      const Vertex w = nb[next[v]++];
      if (disc[w] < 0) {
        parent[w] = v;
        disc[w] = low[w] = time++;
        edge_stack.emplace_back(v, w);
        stack.push_back(w);
      } else if (w != parent[v] && disc[w] < disc[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    const Vertex p = parent[v];
    if (p < 0) continue;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      std::set<Vertex> members;
      const Edge closing(p, v);
      for (;;) {
        const Edge e = edge_stack.back();
        edge_stack.pop_back();
        members.insert(e.u);
        members.insert(e.v);
        if (e == closing) break;
      }
      d.blocks.emplace_back(members.begin(), members.end());
    }
  }
  std::sort(d.blocks.begin(), d.blocks.end());

  std::vector<int> count(n, 0);
  for (const auto& b : d.blocks) {
    for (Vertex v : b) ++count[v];
    if (b.size() == 2) d.bridges.emplace_back(b[0], b[1]);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (count[v] >= 2) d.cutvertices.push_back(v);
  }
  std::sort(d.bridges.begin(), d.bridges.end());
  return d;
}

BlockTree block_tree(const BlockDecomposition& d) {
  BlockTree t;
  const int blocks = static_cast<int>(d.blocks.size());
  for (int i = 0; i < blocks; ++i) t.nodes.push_back({BlockTree::Node::Kind::kBlock, i});
  std::map<Vertex, int> cut_node;
  for (Vertex c : d.cutvertices) {
    cut_node[c] = static_cast<int>(t.nodes.size());
    t.nodes.push_back({BlockTree::Node::Kind::kCut, c});
  }
  for (int i = 0; i < blocks; ++i) {
    for (Vertex v : d.blocks[i]) {
      if (const auto it = cut_node.find(v); it != cut_node.end()) t.edges.emplace_back(i, it->second);
    }
  }
  if (t.nodes.empty()) return t;
  if (t.edges.size() + 1 != t.nodes.size()) throw InvariantError("block graph is not a tree");

  const int total = static_cast<int>(t.nodes.size());
  std::vector<std::vector<int>> adj(total);
  for (const auto& [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> degree(total);
  std::vector<int> layer;
  for (int i = 0; i < total; ++i) {
    degree[i] = static_cast<int>(adj[i].size());
    if (degree[i] <= 1) layer.push_back(i);
  }
  int remaining = total;
  std::vector<char> removed(total, 0);
  while (remaining > 2) {
    std::vector<int> next_layer;
    for (int leaf : layer) {
      removed[leaf] = 1;
      --remaining;
      for (int w : adj[leaf]) {
        if (!removed[w] && --degree[w] == 1) next_layer.push_back(w);
      }
    }
    layer = std::move(next_layer);
  }
  std::vector<int> centre;
  for (int i = 0; i < total; ++i) {
    if (!removed[i]) centre.push_back(i);
  }
  if (centre.size() != 1) throw InvariantError("block tree centre is not a single node");
  t.centre = centre.front();
  return t;
}

std::vector<std::vector<Vertex>> two_edge_connected_components(const Graph& g) {
  require_connected(g);
  const auto d = block_decomposition(g);
  std::set<Edge> bridges(d.bridges.begin(), d.bridges.end());
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0 && !bridges.contains(Edge(v, w))) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<Vertex> two_core(const Graph& g) {
  const int n = g.order();
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --degree[w] <= 1) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) core.push_back(v);
  }
  return core;
}

std::vector<PendantTree> pendant_trees(const Graph& g) {
  if (betti(g) < 1) throw PreconditionError("pendant trees are defined for graphs with a cycle");
  std::vector<char> in_core(g.order(), 0);
  for (Vertex v : two_core(g)) in_core[v] = 1;

  std::vector<PendantTree> out;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (!in_core[w]) continue;
    // Everything reachable from w through non-core vertices hangs from w alone.
    std::vector<Vertex> vertices{w};
    std::vector<Vertex> stack;
    std::vector<char> seen(g.order(), 0);
    seen[w] = 1;
    for (Vertex u : g.neighbors(w)) {
      if (!in_core[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
    if (stack.empty()) continue;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      vertices.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(vertices.begin(), vertices.end());
    PendantTree s{w, std::move(vertices), {}};
    for (const Edge& e : g.edges()) {
      if (std::binary_search(s.vertices.begin(), s.vertices.end(), e.u) &&
          std::binary_search(s.vertices.begin(), s.vertices.end(), e.v)) {
        s.edges.push_back(e);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool is_rigid_pendant_tree(const PendantTree& s) {
  return !RootedTree(s.vertices, s.edges, s.root).symmetric_siblings().has_value();
}

OrientedCycle unique_cycle(const Graph& g) {
  const int b = betti(g);
  if (b != 1) throw PreconditionError("graph has Betti number " + std::to_string(b) + ", not 1");
  const auto basis = spanning_tree_basis(g);
  const auto cyc = basis.cycle(0).vertices();
  const std::size_t len = cyc.size();
  const auto start = static_cast<std::size_t>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
  const bool forward = cyc[(start + 1) % len] < cyc[(start + len - 1) % len];
  std::vector<Dart> darts;
  for (std::size_t j = 0; j < len; ++j) {
    const std::size_t a = forward ? (start + j) % len : (start + len - j) % len;
    const std::size_t b2 = forward ? (start + j + 1) % len : (start + 2 * len - j - 1) % len;
    darts.push_back({cyc[a], cyc[b2]});
  }
  return OrientedCycle(std::move(darts));
}

Periodicity is_periodic_unicyclic(const Graph& g) {
  if (betti(g) != 1) return {};
  const auto cycle = unique_cycle(g);
  const auto ring = cycle.vertices();
  const std::size_t len = ring.size();

  std::set<Edge> cycle_edges;
  for (const Dart& d : cycle.darts()) cycle_edges.insert(d.edge());
  std::vector<Edge> rest;
  for (const Edge& e : g.edges()) {
    if (!cycle_edges.contains(e)) rest.push_back(e);
  }
  const Graph forest(g.order(), rest);

  std::vector<std::string> word;
  word.reserve(len);
  for (Vertex v : ring) {
    std::vector<Vertex> comp{v};
    std::vector<char> seen(g.order(), 0);
    seen[v] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : forest.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    word.push_back(ahu_code(forest, comp, v));
  }

  for (std::size_t k = 1; k <= len; ++k) {
    if (len % k) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < len; ++i) ok = word[i] == word[(i + k) % len];
    if (ok) {
      if (k == len) return {};
      return {true, static_cast<int>(k)};
    }
  }
  return {};
}

nlohmann::json block_tree_to_json(const BlockDecomposition& d, const BlockTree& t) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& node : t.nodes) {
    if (node.kind == BlockTree::Node::Kind::kBlock) {
      nodes.push_back({{"kind", "block"}, {"members", d.blocks[node.id]}});
    } else {
      nodes.push_back({{"kind", "cut"}, {"vertex", node.id}});
    }
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : t.edges) edges.push_back({a, b});
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"centre", t.centre}};
}

}  // namespace homrep
