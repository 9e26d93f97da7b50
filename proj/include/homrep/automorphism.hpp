#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "homrep/cycle_space.hpp"
#include "homrep/graph.hpp"

namespace homrep {

/// A vertex permutation; perm()[v] is the image of v.
class Automorphism {
 public:
  Automorphism() = default;
  /// Throws PreconditionError unless `perm` is a bijection on 0..n-1.
  explicit Automorphism(std::vector<Vertex> perm);

  static Automorphism identity(int n);

  std::span<const Vertex> perm() const noexcept { return perm_; }
  int size() const noexcept { return static_cast<int>(perm_.size()); }
  bool is_identity() const;

  Vertex operator()(Vertex v) const { return perm_[v]; }
  Dart operator()(const Dart& d) const { return {perm_[d.tail], perm_[d.head]}; }

  Automorphism inverse() const;

  /// Order of the permutation as a group element.
  long long order() const;

  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;

 private:
  std::vector<Vertex> perm_;
};

inline constexpr std::size_t kDefaultAutomorphismCap = 1'000'000;

/// True iff `perm` is a bijection preserving adjacency and non-adjacency.
bool is_automorphism(const Graph& g, std::span<const Vertex> perm);

/// Visits automorphisms of a connected graph in search order until the
/// visitor returns false. Returns the number visited.
std::size_t for_each_automorphism(const Graph& g,
                                  const std::function<bool(const Automorphism&)>& visit);

/// The whole group, identity first and the rest in lexicographic order.
/// Throws CapacityError when the order exceeds `cap`.
std::vector<Automorphism> automorphisms(const Graph& g, std::size_t cap = kDefaultAutomorphismCap);

/// Group order, or CapacityError when it exceeds `cap`.
std::size_t count_automorphisms(const Graph& g, std::size_t cap = kDefaultAutomorphismCap);

/// Stops at the first non-identity automorphism.
bool has_nontrivial_automorphism(const Graph& g);

/// Throws PreconditionError when `d` is not a dart of `g` or sizes differ.
Dart apply_to_dart(const Graph& g, const Automorphism& f, const Dart& d);

/// (f o g)(v) = f(g(v)): the right factor acts first.
Automorphism compose(const Automorphism& f, const Automorphism& g);

OrientedCycle image_cycle(const Automorphism& f, const OrientedCycle& c);

}  // namespace homrep
