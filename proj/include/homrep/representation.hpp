#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"

#include "homrep/automorphism.hpp"
#include "homrep/cycle_space.hpp"
#include "homrep/matrix.hpp"

namespace homrep {

/// Matrix of the automorphism on the cycle space: column j holds the
/// coordinates of f(C_j). With compose() acting right-to-left this gives
/// matrix_of(f o g) == matrix_of(f) * matrix_of(g).
IntMatrix matrix_of(const Automorphism& f, const SpanningTreeBasis& b);

struct RepresentationReport {
  SpanningTreeBasis basis;
  /// One entry per automorphism, in automorphisms() order.
  std::vector<std::pair<Automorphism, IntMatrix>> matrices;
  std::vector<Automorphism> kernel;
  bool faithful = false;

  std::size_t group_order() const noexcept { return matrices.size(); }
};

RepresentationReport representation(const Graph& g, const SpanningTreeBasis& b,
                                     std::size_t cap = kDefaultAutomorphismCap);

/// Same as representation() but reuses a precomputed group.
RepresentationReport representation(const SpanningTreeBasis& b, std::vector<Automorphism> group);

/// Column j is the coordinate vector of the new j-th fundamental cycle in the
/// old basis, so matrix_of(f, new) == P^-1 * matrix_of(f, old) * P.
IntMatrix change_of_basis(const SpanningTreeBasis& old_basis, const SpanningTreeBasis& new_basis);

/// Automorphisms whose matrix reduces to the identity modulo p.
std::vector<Automorphism> kernel_mod_p(const Graph& g, const SpanningTreeBasis& b, std::int64_t p,
                                       std::size_t cap = kDefaultAutomorphismCap);

std::vector<Automorphism> kernel_mod_p(const SpanningTreeBasis& b, std::span<const Automorphism> group,
                                       std::int64_t p);

/// {"dim": d, "rows": [[...], ...]}
nlohmann::json matrix_to_json(const IntMatrix& m);

nlohmann::json basis_to_json(const SpanningTreeBasis& b);

}  // namespace homrep
