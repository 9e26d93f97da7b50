#include "homrep/families.hpp"

#include <charconv>
#include <sstream>

#include "homrep/errors.hpp"

namespace homrep {

RootedTreeSpec::RootedTreeSpec(std::vector<int> parent) : parent_(std::move(parent)) {
  if (parent_.empty() || parent_[0] != -1) throw PreconditionError("tree spec must start with the root (-1)");
  for (std::size_t i = 1; i < parent_.size(); ++i) {
    if (parent_[i] < 0 || parent_[i] >= static_cast<int>(i)) {
      throw PreconditionError("parent of vertex " + std::to_string(i) + " must precede it");
    }
  }
}

RootedTreeSpec RootedTreeSpec::parse(std::string_view text) {
  std::vector<int> parent;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("malformed parent entry '" + token + "'");
    }
    parent.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == '[' || c == ']' || c == ' ' || c == '\t') {
      flush();
    } else if (c == ',') {
      if (token.empty()) throw ParseError("empty parent entry");
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  if (parent.empty()) throw ParseError("empty tree spec");
  return RootedTreeSpec(std::move(parent));
}

std::string RootedTreeSpec::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parent_.size(); ++i) out << (i ? "," : "") << parent_[i];
  out << ']';
  return out.str();
}

RootedTreeSpec random_rooted_tree(int max_vertices, std::mt19937_64& rng) {
  if (max_vertices < 1) throw PreconditionError("a rooted tree needs at least one vertex");
  const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
  std::vector<int> parent{-1};
  for (int i = 1; i < size; ++i) parent.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(i)));
  return RootedTreeSpec(std::move(parent));
}

PeriodicUnicyclic build_periodic_unicyclic(int n, int k, const std::vector<RootedTreeSpec>& specs) {
  if (n <= 2) throw PreconditionError("cycle length must exceed 2");
  if (k < 1 || k >= n) throw PreconditionError("period must satisfy 1 <= k < n");
  if (n % k) throw PreconditionError("period " + std::to_string(k) + " does not divide " + std::to_string(n));
  if (static_cast<int>(specs.size()) != k) {
    throw PreconditionError("expected " + std::to_string(k) + " tree specs, got " + std::to_string(specs.size()));
  }

  std::vector<Edge> edges;
  for (int j = 0; j < n; ++j) edges.emplace_back(j, (j + 1) % n);

  // label[j][t]: graph label of spec vertex t in the copy at v_j.
  std::vector<std::vector<Vertex>> label(n);
  int next = n;
  for (int j = 0; j < n; ++j) {
    const auto& spec = specs[j % k];
    label[j].push_back(j);
    for (int t = 1; t < spec.size(); ++t) {
      label[j].push_back(next++);
      edges.emplace_back(label[j][spec.parent()[t]], label[j][t]);
    }
  }
  Graph g(next, std::move(edges));

  std::vector<Vertex> perm(next);
  for (int j = 0; j < n; ++j) {
    const int to = (j + k) % n;
    for (std::size_t t = 0; t < label[j].size(); ++t) perm[label[j][t]] = label[to][t];
  }
  Automorphism rho(std::move(perm));
  if (!is_automorphism(g, rho.perm())) throw InvariantError("rotation is not an automorphism");
  if (rho.order() != n / k) throw InvariantError("rotation has the wrong order");
  return {std::move(g), std::move(rho)};
}

Graph named_family(std::string_view name, int size) {
  std::vector<Edge> edges;
  auto bad = [&] {
    return PreconditionError("invalid size " + std::to_string(size) + " for family '" + std::string(name) + "'");
  };
  if (name == "cycle") {
    if (size < 3) throw bad();
    for (int i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
    return Graph(size, std::move(edges));
  }
  if (name == "complete") {
    if (size < 1) throw bad();
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) edges.emplace_back(i, j);
    }
    return Graph(size, std::move(edges));
  }
  if (name == "star") {
    if (size < 1) throw bad();
    for (int i = 1; i <= size; ++i) edges.emplace_back(0, i);
    return Graph(size + 1, std::move(edges));
  }
  if (name == "path") {
    if (size < 1) throw bad();
    for (int i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
    return Graph(size, std::move(edges));
  }
  if (name == "bowtie") {
    if (size < 1) throw bad();
    for (int t = 0; t < size; ++t) {
      edges.emplace_back(2 * t, 2 * t + 1);
      edges.emplace_back(2 * t + 1, 2 * t + 2);
      edges.emplace_back(2 * t, 2 * t + 2);
    }
    return Graph(2 * size + 1, std::move(edges));
  }
  throw PreconditionError("unknown family '" + std::string(name) + "'");
}

}  // namespace homrep
