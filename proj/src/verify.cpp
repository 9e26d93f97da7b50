#include "homrep/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "homrep/blocks.hpp"
#include "homrep/classifier.hpp"
#include "homrep/errors.hpp"
#include "homrep/families.hpp"
#include "homrep/rooted_tree.hpp"

namespace homrep {

void CriterionResult::fail(const Graph& g, std::string why) {
  passed = false;
  ++violations;
  if (!reproducer) {
    reproducer = to_edge_list(g);
    detail = std::move(why);
  }
}

Corpus::Corpus(int n_max, std::size_t cap) : n_max_(n_max) {
  if (n_max < ConnectedGraphEnumerator::kMinOrder || n_max > ConnectedGraphEnumerator::kMaxOrder) {
    throw PreconditionError("corpus order must satisfy 2 <= n_max <= 6, got " + std::to_string(n_max));
  }
  for (int n = ConnectedGraphEnumerator::kMinOrder; n <= n_max; ++n) {
    ConnectedGraphEnumerator it(n);
    while (auto g = it.next()) {
      auto basis = spanning_tree_basis(*g);
      auto rep = representation(*g, basis, cap);
      entries_.push_back({std::move(*g), std::move(rep)});
    }
  }
}

std::size_t Corpus::count(int n) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [n](const CorpusEntry& e) { return e.graph.order() == n; }));
}

namespace {

std::vector<Automorphism> group_of(const RepresentationReport& rep) {
  std::vector<Automorphism> out;
  out.reserve(rep.matrices.size());
  for (const auto& [f, m] : rep.matrices) out.push_back(f);
  return out;
}

const IntMatrix* lookup(const RepresentationReport& rep, const Automorphism& f) {
  const auto it = std::lower_bound(rep.matrices.begin(), rep.matrices.end(), f,
                                   [](const auto& entry, const Automorphism& key) { return entry.first < key; });
  if (it == rep.matrices.end() || it->first != f) return nullptr;
  return &it->second;
}

bool entries_are_signs(const IntMatrix& m) {
  return (m.array() >= -1).all() && (m.array() <= 1).all();
}

std::string describe(const Automorphism& f) {
  std::ostringstream out;
  out << '[';
  for (int v = 0; v < f.size(); ++v) out << (v ? " " : "") << f(v);
  out << ']';
  return out.str();
}

}  // namespace

CriterionResult check_classification(const Corpus& corpus) {
  CriterionResult r(1, "structural classification equals brute-force kernel triviality");
  for (const auto& e : corpus.entries()) {
    ++r.checked;
    const Verdict v = classify(e.graph);
    if (v.faithful != e.rep.faithful) {
      r.fail(e.graph, "classify says " + to_string(v.reason) + " but kernel has " +
                          std::to_string(e.rep.kernel.size()) + " elements");
    }
  }
  return r;
}

CriterionResult check_homomorphism(const Corpus& corpus, const VerifyConfig& cfg) {
  CriterionResult r(2, "homomorphism into unimodular {-1,0,1} matrices");
  std::mt19937_64 rng(cfg.sample_seed);
  for (const auto& e : corpus.entries()) {
    const auto& mats = e.rep.matrices;
    for (const auto& [f, m] : mats) {
      const auto d = determinant(m);
      if (d != 1 && d != -1) r.fail(e.graph, "determinant " + std::to_string(d) + " for " + describe(f));
      if (!entries_are_signs(m)) r.fail(e.graph, "entry outside {-1,0,1} for " + describe(f));
    }
    auto check_pair = [&](std::size_t a, std::size_t b) {
      ++r.checked;
      const auto h = compose(mats[a].first, mats[b].first);
      const IntMatrix* mh = lookup(e.rep, h);
      if (mh == nullptr) {
        r.fail(e.graph, "composition " + describe(h) + " is not in the group");
        return;
      }
      if (*mh != checked_product(mats[a].second, mats[b].second)) {
        r.fail(e.graph, "M(f g) != M(f) M(g) for f=" + describe(mats[a].first) + " g=" + describe(mats[b].first));
      }
    };
    if (e.graph.order() <= cfg.exhaustive_n_max) {
      for (std::size_t a = 0; a < mats.size(); ++a) {
        for (std::size_t b = 0; b < mats.size(); ++b) check_pair(a, b);
      }
    } else {
      for (std::size_t s = 0; s < cfg.pair_samples; ++s) {
        const auto a = static_cast<std::size_t>(rng() % mats.size());
        const auto b = static_cast<std::size_t>(rng() % mats.size());
        check_pair(a, b);
      }
    }
  }
  return r;
}

CriterionResult check_basis_independence(const Corpus& corpus, const VerifyConfig& cfg) {
  CriterionResult r(3, "kernel and conjugacy independent of the spanning tree");
  for (const auto& e : corpus.entries()) {
    const bool exhaustive = e.graph.order() <= cfg.exhaustive_n_max;
    for (const auto seed : cfg.basis_seeds) {
      ++r.checked;
      const auto other = random_spanning_tree_basis(e.graph, seed);
      std::vector<Automorphism> kernel;
      for (const auto& [f, m] : e.rep.matrices) {
        if (is_identity(matrix_of(f, other))) kernel.push_back(f);
      }
      if (kernel != e.rep.kernel) {
        r.fail(e.graph, "kernel differs under random basis seed " + std::to_string(seed));
      }
      if (!exhaustive) continue;
      const IntMatrix p = change_of_basis(e.rep.basis, other);
      if (!is_unimodular(p)) {
        r.fail(e.graph, "change of basis not unimodular for seed " + std::to_string(seed));
        continue;
      }
      const IntMatrix p_inv = unimodular_inverse(p);
      for (const auto& [f, m] : e.rep.matrices) {
        if (matrix_of(f, other) != checked_product(checked_product(p_inv, m), p)) {
          r.fail(e.graph, "M_T'(f) != P^-1 M_T(f) P for f=" + describe(f) + " seed " + std::to_string(seed));
        }
      }
    }
  }
  return r;
}

CriterionResult check_kernel_structure(const Corpus& corpus) {
  CriterionResult r(4, "kernel elements fix cycles, nontrivial blocks and non-cycle 2-edge-connected parts");
  for (const auto& e : corpus.entries()) {
    if (e.rep.kernel.size() <= 1) continue;
    const auto& b = e.rep.basis;
    const auto blocks = block_decomposition(e.graph);
    const auto comps = two_edge_connected_components(e.graph);
    std::vector<std::vector<Vertex>> rigid_parts;
    for (const auto& c : comps) {
      const Graph sub = e.graph.induced(c);
      if (sub.size() > static_cast<std::size_t>(sub.order())) rigid_parts.push_back(c);
    }
    for (const auto& f : e.rep.kernel) {
      if (f.is_identity()) continue;
      ++r.checked;
      for (int i = 0; i < b.dimension(); ++i) {
        if (!image_cycle(f, b.cycle(i)).same_oriented(b.cycle(i))) {
          r.fail(e.graph, describe(f) + " moves fundamental cycle " + std::to_string(i));
        }
        for (int j = i + 1; j < b.dimension(); ++j) {
          auto vi = b.cycle(i).vertices();
          auto vj = b.cycle(j).vertices();
          std::sort(vi.begin(), vi.end());
          std::sort(vj.begin(), vj.end());
          std::vector<Vertex> common;
          std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(), std::back_inserter(common));
          if (common.empty()) continue;
          for (const auto& c : {b.cycle(i), b.cycle(j)}) {
            for (const Dart& d : c.darts()) {
              if (f(d) != d) r.fail(e.graph, describe(f) + " moves a dart of intersecting cycles");
            }
          }
        }
      }
      for (std::size_t k = 0; k < blocks.blocks.size(); ++k) {
        if (!blocks.is_nontrivial(k)) continue;
        std::vector<Vertex> image;
        for (Vertex v : blocks.blocks[k]) image.push_back(f(v));
        std::sort(image.begin(), image.end());
        if (image != blocks.blocks[k]) r.fail(e.graph, describe(f) + " moves a nontrivial block");
      }
      for (const auto& part : rigid_parts) {
        for (Vertex v : part) {
          if (f(v) != v) r.fail(e.graph, describe(f) + " moves vertex " + std::to_string(v) +
                                             " of a non-cycle 2-edge-connected subgraph");
        }
      }
    }
  }
  return r;
}

CriterionResult check_no_leaf_graphs(const Corpus& corpus) {
  CriterionResult r(5, "minimum degree >= 2: kernel trivial unless a simple cycle, then the rotations");
  for (const auto& e : corpus.entries()) {
    const Graph& g = e.graph;
    bool leafless = true;
    for (Vertex v = 0; v < g.order(); ++v) leafless = leafless && g.degree(v) >= 2;
    if (!leafless) continue;
    ++r.checked;
    if (!is_simple_cycle(g)) {
      if (e.rep.kernel.size() != 1) r.fail(g, "nontrivial kernel on a leafless non-cycle");
      continue;
    }
    // Walk the ring and build every rotation independently of the classifier.
    std::vector<Vertex> ring{0, g.neighbors(0)[0]};
    while (static_cast<int>(ring.size()) < g.order()) {
      const Vertex prev = ring[ring.size() - 2];
      const Vertex cur = ring.back();
      ring.push_back(g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0]);
    }
    std::vector<Automorphism> rotations;
    const int n = g.order();
    for (int s = 0; s < n; ++s) {
      std::vector<Vertex> p(n);
      for (int j = 0; j < n; ++j) p[ring[j]] = ring[(j + s) % n];
      rotations.emplace_back(std::move(p));
    }
    std::sort(rotations.begin(), rotations.end());
    if (rotations != e.rep.kernel) r.fail(g, "cycle kernel is not the rotation subgroup");
  }
  return r;
}

namespace {

const char* const kSquareWithTailsEdges =
    "n 10\n0 1\n0 3\n0 4\n1 2\n1 5\n2 3\n2 7\n3 8\n5 6\n8 9\n";
const std::vector<Vertex> kSquareWithTailsRotation{2, 3, 0, 1, 7, 8, 9, 4, 5, 6};

}  // namespace

CriterionResult check_periodic_family(const VerifyConfig& cfg) {
  CriterionResult r(6, "periodic unicyclic family: rotation is a kernel element and classify agrees");

  const auto fig = build_periodic_unicyclic(4, 2, {RootedTreeSpec({-1, 0}), RootedTreeSpec({-1, 0, 1})});
  ++r.checked;
  if (to_edge_list(fig.graph) != kSquareWithTailsEdges ||
      !std::equal(fig.rotation.perm().begin(), fig.rotation.perm().end(), kSquareWithTailsRotation.begin(),
                  kSquareWithTailsRotation.end())) {
    r.fail(fig.graph, "two-period square example does not reproduce the frozen labelling");
  }

  std::mt19937_64 rng(cfg.family_seed);
  std::size_t rejected = 0;
  std::size_t accepted = 0;
  while (accepted < cfg.family_instances) {
    const int n = 3 + static_cast<int>(rng() % 10);
    std::vector<int> divisors;
    for (int k = 1; k < n; ++k) {
      if (n % k == 0) divisors.push_back(k);
    }
    const int k = divisors[rng() % divisors.size()];
    std::vector<RootedTreeSpec> specs;
    for (int i = 0; i < k; ++i) specs.push_back(random_rooted_tree(4, rng));
    const auto inst = build_periodic_unicyclic(n, k, specs);
    try {
      count_automorphisms(inst.graph, cfg.cap);
    } catch (const CapacityError&) {
      ++rejected;
      continue;
    }
    ++accepted;
    ++r.checked;
    const Graph& g = inst.graph;
    const Automorphism& rho = inst.rotation;
    if (!is_automorphism(g, rho.perm())) r.fail(g, "rotation is not an automorphism");
    if (rho.order() != n / k) r.fail(g, "rotation order " + std::to_string(rho.order()));
    if (!is_identity(matrix_of(rho, spanning_tree_basis(g)))) r.fail(g, "rotation outside the kernel");
    if (!is_identity(matrix_of(rho, random_spanning_tree_basis(g, cfg.family_seed + accepted)))) {
      r.fail(g, "rotation outside the kernel for a random spanning tree");
    }
    if (classify(g).faithful) r.fail(g, "classify reports faithful");
    const auto per = is_periodic_unicyclic(g);
    if (!per.periodic || k % *per.period != 0) r.fail(g, "detected period does not divide " + std::to_string(k));
  }
  r.notes.push_back(std::to_string(rejected) + " instances resampled for exceeding the automorphism cap");
  return r;
}

CriterionResult check_mod_p(const Corpus& corpus) {
  CriterionResult r(7, "kernel modulo 3 equals the integer kernel");
  std::size_t mod2_larger = 0;
  std::vector<std::string> examples;
  for (const auto& e : corpus.entries()) {
    ++r.checked;
    const auto group = group_of(e.rep);
    if (kernel_mod_p(e.rep.basis, group, 3) != e.rep.kernel) r.fail(e.graph, "mod-3 kernel differs");
    const auto k2 = kernel_mod_p(e.rep.basis, group, 2);
    if (k2.size() > e.rep.kernel.size()) {
      ++mod2_larger;
      if (examples.size() < 5) examples.push_back(to_graph6(e.graph));
    }
  }
  std::string note = std::to_string(mod2_larger) + " graphs have a mod-2 kernel strictly larger than the integer kernel";
  if (!examples.empty()) {
    note += " (e.g.";
    for (const auto& s : examples) note += " " + s;
    note += ")";
  }
  r.notes.push_back(std::move(note));
  return r;
}

CriterionResult check_numerals() {
  CriterionResult r(8, "Betti numbers and group orders of complete graphs, cycles and the claw");
  for (int n = 4; n <= 8; ++n) {
    ++r.checked;
    const Graph k = named_family("complete", n);
    if (betti(k) != (n - 1) * (n - 2) / 2) r.fail(k, "betti(K_n) mismatch");
  }
  for (int p : {3, 5, 7}) {
    ++r.checked;
    const Graph c = named_family("cycle", p);
    if (count_automorphisms(c) != static_cast<std::size_t>(2 * p)) r.fail(c, "|Aut(C_p)| != 2p");
    if (betti(c) != 1) r.fail(c, "betti(C_p) != 1");
  }
  ++r.checked;
  const Graph claw = named_family("star", 3);
  const auto rep = representation(claw, spanning_tree_basis(claw));
  if (betti(claw) != 0 || rep.kernel.size() != 6 || rep.group_order() != 6) r.fail(claw, "claw kernel is not everything");
  return r;
}

CriterionResult check_canonical_forms(const Corpus& corpus, const VerifyConfig& cfg) {
  CriterionResult r(9, "canonical tree codes and periodicity match brute force");

  // Every rooted tree as a parent list with parent[i] < i; covers all shapes.
  for (int n = 1; n <= cfg.rooted_tree_max; ++n) {
    std::map<std::string, std::vector<Edge>> code_to_key;
    std::map<std::vector<Edge>, std::string> key_to_code;
    std::vector<int> parent(n, 0);
    parent[0] = -1;
    for (;;) {
      std::vector<Edge> edges;
      for (int i = 1; i < n; ++i) edges.emplace_back(parent[i], i);
      std::vector<Vertex> verts(n);
      std::iota(verts.begin(), verts.end(), 0);
      const std::string code = RootedTree(verts, edges, 0).code();
      const auto key = brute::rooted_tree_key(n, edges, 0);
      ++r.checked;
      const auto [ci, cnew] = code_to_key.emplace(code, key);
      const auto [ki, knew] = key_to_code.emplace(key, code);
      if (ci->second != key || ki->second != code) {
        r.fail(Graph(n, edges), "AHU code disagrees with brute-force rooted isomorphism");
      }
      int i = n - 1;
      while (i >= 1 && parent[i] == i - 1) parent[i--] = 0;
      if (i < 1) break;
      ++parent[i];
    }
  }

  for (const auto& e : corpus.entries()) {
    if (static_cast<int>(e.graph.size()) != e.graph.order()) continue;
    ++r.checked;
    if (is_periodic_unicyclic(e.graph).periodic != brute::has_cycle_rotation(e.graph)) {
      r.fail(e.graph, "periodicity disagrees with brute-force rotation search");
    }
  }
  return r;
}

std::vector<CriterionResult> run_verification(const VerifyConfig& cfg, const Progress& progress) {
  auto say = [&](const std::string& s) {
    if (progress) progress(s);
  };
  say("building corpus for n <= " + std::to_string(cfg.n_max));
  const Corpus corpus(cfg.n_max, cfg.cap);
  for (int n = 2; n <= cfg.n_max; ++n) say("  n=" + std::to_string(n) + ": " + std::to_string(corpus.count(n)) + " graphs");

  std::vector<CriterionResult> out;
  auto run = [&](auto&& fn) {
    out.push_back(fn());
    say("criterion " + std::to_string(out.back().id) + " done");
  };
  run([&] { return check_classification(corpus); });
  run([&] { return check_homomorphism(corpus, cfg); });
  run([&] { return check_basis_independence(corpus, cfg); });
  run([&] { return check_kernel_structure(corpus); });
  run([&] { return check_no_leaf_graphs(corpus); });
  run([&] { return check_periodic_family(cfg); });
  run([&] { return check_mod_p(corpus); });
  run([&] { return check_numerals(); });
  run([&] { return check_canonical_forms(corpus, cfg); });
  return out;
}

namespace brute {

std::size_t automorphism_count(const Graph& g) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    if (is_automorphism(g, p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::vector<Edge> rooted_tree_key(int n, std::span<const Edge> edges, Vertex root) {
  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v) {
    if (v != root) others.push_back(v);
  }
  std::vector<Edge> best;
  std::vector<Vertex> label(n);
  do {
    label[root] = 0;
    for (std::size_t i = 0; i < others.size(); ++i) label[others[i]] = static_cast<Vertex>(i) + 1;
    std::vector<Edge> key;
    for (const Edge& e : edges) key.emplace_back(label[e.u], label[e.v]);
    std::sort(key.begin(), key.end());
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(others.begin(), others.end()));
  return best;
}

bool has_cycle_rotation(const Graph& g) {
  const int n = g.order();
  // Strip leaves until only the cycle remains.
  std::vector<int> degree(n);
  std::vector<char> gone(n, 0);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v] || degree[v] > 1) continue;
      gone[v] = 1;
      changed = true;
      for (Vertex w : g.neighbors(v)) {
        if (!gone[w]) --degree[w];
      }
    }
  }
  std::vector<Vertex> ring;
  for (Vertex v = 0; v < n && ring.empty(); ++v) {
    if (!gone[v]) ring.push_back(v);
  }
  if (ring.empty()) return false;
  for (;;) {
    const Vertex cur = ring.back();
    Vertex step = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (gone[w] || (ring.size() >= 2 && w == ring[ring.size() - 2])) continue;
      step = w;
      break;
    }
    if (step == ring.front()) break;
    ring.push_back(step);
  }
  const std::size_t len = ring.size();
  std::vector<int> pos(n, -1);
  for (std::size_t j = 0; j < len; ++j) pos[ring[j]] = static_cast<int>(j);

  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    const int s = pos[p[ring[0]]];
    if (s <= 0 || pos[p[ring[1]]] != static_cast<int>((s + 1) % len)) continue;
    if (is_automorphism(g, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace brute

}  // namespace homrep
