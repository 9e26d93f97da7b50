#include "homrep/representation.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "homrep/errors.hpp"
#include "homrep/families.hpp"
#include "oracles.hpp"

namespace homrep {
namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

TEST(Matrix, FourCycle) {
  const Graph c4 = named_family("cycle", 4);
  const auto b = spanning_tree_basis(c4);
  EXPECT_EQ(matrix_of(Automorphism({1, 2, 3, 0}), b), from_rows({{1}}));
  EXPECT_EQ(matrix_of(Automorphism({0, 3, 2, 1}), b), from_rows({{-1}}));
}

TEST(Matrix, TranspositionInK4) {
  const auto b = spanning_tree_basis(named_family("complete", 4));
  // Co-tree x0=(1,2), x1=(1,3), x2=(2,3); (2 3) sends C0 to C1, C1 to C0, C2 to -C2.
  const IntMatrix m = matrix_of(Automorphism({0, 1, 3, 2}), b);
  EXPECT_EQ(m, from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}));
  EXPECT_EQ(determinant(m), 1);
  EXPECT_EQ(matrix_mod_p(m, std::int64_t{2}), from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
}

TEST(Matrix, TreeIsZeroDimensional) {
  const auto rep = representation(named_family("star", 3), spanning_tree_basis(named_family("star", 3)));
  EXPECT_EQ(rep.group_order(), 6u);
  EXPECT_EQ(rep.kernel.size(), 6u);
  EXPECT_FALSE(rep.faithful);
  EXPECT_EQ(rep.matrices[0].second.size(), 0);
}

TEST(Kernel, RotationsOfSixCycle) {
  const Graph c6 = named_family("cycle", 6);
  const auto rep = representation(c6, spanning_tree_basis(c6));
  EXPECT_EQ(rep.group_order(), 12u);
  ASSERT_EQ(rep.kernel.size(), 6u);
  for (const auto& f : rep.kernel) {
    const int shift = (f(0) + 6) % 6;
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(f(v), (v + shift) % 6);
  }
}

TEST(Kernel, FaithfulK4) {
  const Graph g = named_family("complete", 4);
  const auto rep = representation(g, spanning_tree_basis(g));
  EXPECT_TRUE(rep.faithful);
  ASSERT_EQ(rep.kernel.size(), 1u);
  EXPECT_TRUE(rep.kernel[0].is_identity());
}

TEST(Kernel, GraphMismatch) {
  const auto b = spanning_tree_basis(named_family("cycle", 4));
  EXPECT_THROW(representation(named_family("complete", 4), b), PreconditionError);
}

// Every matrix has entries in {-1, 0, 1} and det +-1, the
// map is a homomorphism, and the kernel agrees with the basis-free oracle.
TEST(Properties, SmallGraphs) {
  for (int n = 3; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const auto rep = representation(g, spanning_tree_basis(g));
      std::map<Automorphism, IntMatrix> lookup(rep.matrices.begin(), rep.matrices.end());
      for (const auto& [f, m] : rep.matrices) {
        ASSERT_TRUE((m.array().abs() <= 1).all());
        ASSERT_TRUE(is_unimodular(m));
        for (const auto& [h, mh] : rep.matrices) {
          ASSERT_EQ(lookup.at(compose(f, h)), checked_product(m, mh));
        }
      }
      EXPECT_TRUE(is_identity(rep.matrices.front().second));
      ASSERT_EQ(rep.kernel.size(), oracle::kernel_size(g)) << to_edge_list(g);
      ASSERT_EQ(rep.faithful, rep.kernel.size() == 1);
    }
  }
}

TEST(ChangeOfBasis, IdentityAndConjugacy) {
  const Graph g = named_family("complete", 4);
  const auto a = spanning_tree_basis(g);
  EXPECT_TRUE(is_identity(change_of_basis(a, a)));
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto b = random_spanning_tree_basis(g, seed);
    const IntMatrix p = change_of_basis(a, b);
    ASSERT_TRUE(is_unimodular(p));
    const IntMatrix pinv = unimodular_inverse(p);
    for (const auto& f : automorphisms(g)) {
      EXPECT_EQ(matrix_of(f, b), checked_product(checked_product(pinv, matrix_of(f, a)), p));
    }
  }
  EXPECT_THROW(change_of_basis(a, spanning_tree_basis(named_family("cycle", 4))), PreconditionError);
}

TEST(ModP, Examples) {
  const Graph c4 = named_family("cycle", 4);
  const auto b = spanning_tree_basis(c4);
  // Reflections act as -1, which is 1 modulo 2.
  EXPECT_EQ(kernel_mod_p(c4, b, 2).size(), 8u);
  EXPECT_EQ(kernel_mod_p(c4, b, 3).size(), 4u);
  EXPECT_THROW(kernel_mod_p(c4, b, 4), PreconditionError);
  const Graph k4 = named_family("complete", 4);
  EXPECT_EQ(kernel_mod_p(k4, spanning_tree_basis(k4), 3).size(), 1u);
}

TEST(Json, Shapes) {
  const auto j = matrix_to_json(from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["rows"], nlohmann::json::parse("[[0,1],[1,0]]"));
  const auto bj = basis_to_json(spanning_tree_basis(Graph(3, {{0, 1}, {1, 2}, {0, 2}})));
  EXPECT_EQ(bj["root"], 0);
  EXPECT_EQ(bj["tree_edges"], nlohmann::json::parse("[[0,1],[0,2]]"));
  EXPECT_EQ(bj["cotree_darts"], nlohmann::json::parse("[[1,2]]"));
}

}  // namespace
}  // namespace homrep
