#include "homrep/representation.hpp"

#include "homrep/errors.hpp"

namespace homrep {

IntMatrix matrix_of(const Automorphism& f, const SpanningTreeBasis& b) {
  if (f.size() != b.graph().order()) throw PreconditionError("automorphism and basis graph sizes differ");
  const int dim = b.dimension();
  IntMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) m.col(j) = cycle_coordinates(image_cycle(f, b.cycle(j)), b);
  return m;
}

RepresentationReport representation(const SpanningTreeBasis& b, std::vector<Automorphism> group) {
  RepresentationReport report{b, {}, {}, false};
  report.matrices.reserve(group.size());
  for (Automorphism& f : group) {
    IntMatrix m = matrix_of(f, b);
    if (is_identity(m)) report.kernel.push_back(f);
    report.matrices.emplace_back(std::move(f), std::move(m));
  }
  report.faithful = report.kernel.size() == 1;
  return report;
}

RepresentationReport representation(const Graph& g, const SpanningTreeBasis& b, std::size_t cap) {
  if (!(g == b.graph())) throw PreconditionError("basis belongs to a different graph");
  return representation(b, automorphisms(g, cap));
}

IntMatrix change_of_basis(const SpanningTreeBasis& old_basis, const SpanningTreeBasis& new_basis) {
  if (!(old_basis.graph() == new_basis.graph())) {
    throw PreconditionError("bases belong to different graphs");
  }
  const int dim = old_basis.dimension();
  IntMatrix p(dim, dim);
  for (int j = 0; j < dim; ++j) p.col(j) = cycle_coordinates(new_basis.cycle(j), old_basis);
  return p;
}

std::vector<Automorphism> kernel_mod_p(const SpanningTreeBasis& b, std::span<const Automorphism> group,
                                       std::int64_t p) {
  if (!is_prime(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  std::vector<Automorphism> kernel;
  for (const Automorphism& f : group) {
    if (is_identity(matrix_mod_p(matrix_of(f, b), p))) kernel.push_back(f);
  }
  return kernel;
}

std::vector<Automorphism> kernel_mod_p(const Graph& g, const SpanningTreeBasis& b, std::int64_t p,
                                       std::size_t cap) {
  if (!is_prime(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  if (!(g == b.graph())) throw PreconditionError("basis belongs to a different graph");
  const auto group = automorphisms(g, cap);
  return kernel_mod_p(b, group, p);
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"rows", std::move(rows)}};
}

nlohmann::json basis_to_json(const SpanningTreeBasis& b) {
  nlohmann::json tree = nlohmann::json::array();
  for (const Edge& e : b.tree_edges()) tree.push_back({e.u, e.v});
  nlohmann::json cotree = nlohmann::json::array();
  for (const Dart& x : b.cotree()) cotree.push_back({x.tail, x.head});
  return {{"root", b.root()}, {"tree_edges", std::move(tree)}, {"cotree_darts", std::move(cotree)}};
}

}  // namespace homrep
