#pragma once

// Slow reference implementations used only by the tests. None of them call
// into the library beyond the Graph container.

#include <algorithm>
#include <numeric>
#include <ostream>
#include <vector>

#include "homrep/graph.hpp"

namespace homrep {
inline void PrintTo(const Graph& g, std::ostream* os) { *os << to_edge_list(g); }
}  // namespace homrep

namespace oracle {

using homrep::Edge;
using homrep::Graph;
using homrep::Vertex;

inline bool preserves_adjacency(const Graph& g, const std::vector<int>& p) {
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (g.adjacent(a, b) != g.adjacent(p[a], p[b])) return false;
    }
  }
  return true;
}

/// Every automorphism by trying all n! permutations, in lexicographic order.
inline std::vector<std::vector<int>> all_automorphisms(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (preserves_adjacency(g, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Union-find connectivity.
inline bool connected(int n, const std::vector<Edge>& edges) {
  if (n == 0) return false;
  std::vector<int> up(n);
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  int parts = n;
  for (const Edge& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      up[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

/// Laplace expansion along the first row.
inline long long cofactor_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const long long sign = j % 2 ? -1 : 1;
    total += sign * m[0][j] * cofactor_det(minor);
  }
  return total;
}

/// Kernel of the homology action computed without bases: an automorphism is
/// in the kernel iff it maps every simple cycle onto itself with the same
/// orientation. Simple cycles are listed by brute-force DFS, so keep n small.
inline std::vector<std::vector<Vertex>> simple_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<char> on(n, 0);
  // Each cycle is produced once per starting vertex = its minimum, per direction.
  auto dfs = [&](auto&& self, Vertex start, Vertex v) -> void {
    for (Vertex w : g.neighbors(v)) {
      if (w == start && path.size() >= 3) out.push_back(path);
      if (w <= start || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on[s] = 1;
    dfs(dfs, s, s);
    on[s] = 0;
  }
  return out;
}

inline bool fixes_oriented_cycle(const std::vector<int>& p, const std::vector<Vertex>& c) {
  const std::size_t k = c.size();
  std::vector<Vertex> img(k);
  for (std::size_t i = 0; i < k; ++i) img[i] = p[c[i]];
  const auto it = std::find(img.begin(), img.end(), c[0]);
  if (it == img.end()) return false;
  const std::size_t off = static_cast<std::size_t>(it - img.begin());
  for (std::size_t i = 0; i < k; ++i) {
    if (img[(i + off) % k] != c[i]) return false;
  }
  return true;
}

/// Number of automorphisms acting trivially on the cycle space.
inline std::size_t kernel_size(const Graph& g) {
  const auto cycles = simple_cycles(g);
  std::size_t count = 0;
  for (const auto& p : all_automorphisms(g)) {
    bool ok = true;
    for (const auto& c : cycles) {
      if (!fixes_oriented_cycle(p, c)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
