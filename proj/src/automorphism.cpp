#include "homrep/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "homrep/errors.hpp"

namespace homrep {

Automorphism::Automorphism(std::vector<Vertex> perm) : perm_(std::move(perm)) {
  std::vector<char> hit(perm_.size(), 0);
  for (Vertex v : perm_) {
    if (v < 0 || v >= size() || hit[v]) throw PreconditionError("not a permutation");
    hit[v] = 1;
  }
}

Automorphism Automorphism::identity(int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  return Automorphism(std::move(p));
}

bool Automorphism::is_identity() const {
  for (int v = 0; v < size(); ++v) {
    if (perm_[v] != v) return false;
  }
  return true;
}

Automorphism Automorphism::inverse() const {
  std::vector<Vertex> inv(perm_.size());
  for (int v = 0; v < size(); ++v) inv[perm_[v]] = v;
  return Automorphism(std::move(inv));
}

long long Automorphism::order() const {
  std::vector<char> seen(perm_.size(), 0);
  long long result = 1;
  for (int v = 0; v < size(); ++v) {
    if (seen[v]) continue;
    long long len = 0;
    for (Vertex w = v; !seen[w]; w = perm_[w]) {
      seen[w] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool is_automorphism(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) return false;
  std::vector<char> hit(perm.size(), 0);
  for (Vertex v : perm) {
    if (v < 0 || v >= g.order() || hit[v]) return false;
    hit[v] = 1;
  }
  // A bijection mapping every edge to an edge maps non-edges to non-edges.
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(perm[e.u], perm[e.v])) return false;
  }
  return true;
}

namespace {

// Stable colour refinement: automorphisms preserve the resulting colours.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      sig[v] = {colour[v], std::move(nb)};
      ids.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) colour[v] = ids[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

class Search {
 public:
  Search(const Graph& g, const std::function<bool(const Automorphism&)>& visit)
      : g_(g), visit_(visit), colour_(refine_colours(g)) {
    const int n = g.order();
    image_.assign(n, -1);
    used_.assign(n, 0);
    // BFS order: every vertex after the first has an already-placed neighbour.
    std::vector<char> seen(n, 0);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = 1;
    anchor_.assign(n, -1);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      order_.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          anchor_[w] = v;
          queue.push(w);
        }
      }
    }
  }

  std::size_t run() {
    extend(0);
    return found_;
  }

 private:
  bool consistent(Vertex v, Vertex cand, std::size_t depth) const {
    if (colour_[v] != colour_[cand]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex u = order_[i];
      if (g_.adjacent(u, v) != g_.adjacent(image_[u], cand)) return false;
    }
    return true;
  }

  // Returns false to abort the whole search.
  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      ++found_;
      return visit_(Automorphism(image_));
    }
    const Vertex v = order_[depth];
    auto try_candidate = [&](Vertex cand) {
      if (used_[cand] || !consistent(v, cand, depth)) return true;
      image_[v] = cand;
      used_[cand] = 1;
      const bool go_on = extend(depth + 1);
      used_[cand] = 0;
      image_[v] = -1;
      return go_on;
    };
    if (anchor_[v] < 0) {
      for (Vertex cand = 0; cand < g_.order(); ++cand) {
        if (!try_candidate(cand)) return false;
      }
    } else {
      for (Vertex cand : g_.neighbors(image_[anchor_[v]])) {
        if (!try_candidate(cand)) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  const std::function<bool(const Automorphism&)>& visit_;
  std::vector<int> colour_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::size_t found_ = 0;
};

}  // namespace

std::size_t for_each_automorphism(const Graph& g,
                                  const std::function<bool(const Automorphism&)>& visit) {
  require_connected(g);
  return Search(g, visit).run();
}

std::vector<Automorphism> automorphisms(const Graph& g, std::size_t cap) {
  if (cap < 1) throw PreconditionError("automorphism cap must be at least 1");
  std::vector<Automorphism> out;
  bool overflow = false;
  for_each_automorphism(g, [&](const Automorphism& f) {
    if (out.size() == cap) {
      overflow = true;
      return false;
    }
    out.push_back(f);
    return true;
  });
  if (overflow) throw CapacityError(cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_automorphisms(const Graph& g, std::size_t cap) {
  if (cap < 1) throw PreconditionError("automorphism cap must be at least 1");
  std::size_t count = 0;
  for_each_automorphism(g, [&](const Automorphism&) { return ++count <= cap; });
  if (count > cap) throw CapacityError(cap);
  return count;
}

bool has_nontrivial_automorphism(const Graph& g) {
  bool found = false;
  for_each_automorphism(g, [&](const Automorphism& f) {
    found = !f.is_identity();
    return !found;
  });
  return found;
}

Dart apply_to_dart(const Graph& g, const Automorphism& f, const Dart& d) {
  if (f.size() != g.order()) throw PreconditionError("automorphism and graph sizes differ");
  if (!g.has_dart(d)) {
    throw PreconditionError("(" + std::to_string(d.tail) + "," + std::to_string(d.head) +
                            ") is not a dart of the graph");
  }
  return f(d);
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (f.size() != g.size()) throw PreconditionError("cannot compose permutations of different sizes");
  std::vector<Vertex> p(f.size());
  for (int v = 0; v < f.size(); ++v) p[v] = f(g(v));
  return Automorphism(std::move(p));
}

OrientedCycle image_cycle(const Automorphism& f, const OrientedCycle& c) {
  std::vector<Dart> darts;
  darts.reserve(c.length());
  for (const Dart& d : c.darts()) {
    if (d.tail >= f.size() || d.head >= f.size()) throw PreconditionError("dart outside automorphism domain");
    darts.push_back(f(d));
  }
  return OrientedCycle(std::move(darts));
}

}  // namespace homrep
