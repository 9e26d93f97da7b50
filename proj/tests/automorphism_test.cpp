#include "homrep/automorphism.hpp"

#include <gtest/gtest.h>

#include <random>

#include "homrep/errors.hpp"
#include "homrep/families.hpp"
#include "oracles.hpp"

namespace homrep {
namespace {

std::vector<std::vector<int>> perms(const std::vector<Automorphism>& group) {
  std::vector<std::vector<int>> out;
  for (const auto& a : group) out.emplace_back(a.perm().begin(), a.perm().end());
  return out;
}

TEST(Permutation, Basics) {
  EXPECT_THROW(Automorphism({0, 0, 1}), PreconditionError);
  EXPECT_THROW(Automorphism({0, 3, 1}), PreconditionError);
  const Automorphism f({1, 2, 0, 4, 3});
  EXPECT_FALSE(f.is_identity());
  EXPECT_EQ(f.order(), 6);
  EXPECT_TRUE(compose(f, f.inverse()).is_identity());
  EXPECT_TRUE(Automorphism::identity(4).is_identity());
  EXPECT_EQ(Automorphism::identity(4).order(), 1);
  EXPECT_EQ(f(Dart{0, 3}), (Dart{1, 4}));
}

TEST(Permutation, ComposeActsRightToLeft) {
  const Automorphism f({1, 0, 2});
  const Automorphism g({0, 2, 1});
  const Automorphism fg = compose(f, g);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(fg(v), f(g(v)));
  EXPECT_EQ(fg, Automorphism({1, 2, 0}));
  EXPECT_THROW(compose(f, Automorphism::identity(4)), PreconditionError);
}

TEST(Groups, KnownOrders) {
  EXPECT_EQ(count_automorphisms(named_family("complete", 4)), 24u);
  EXPECT_EQ(count_automorphisms(named_family("cycle", 5)), 10u);
  EXPECT_EQ(count_automorphisms(named_family("path", 3)), 2u);
  EXPECT_EQ(count_automorphisms(named_family("star", 4)), 24u);
  EXPECT_EQ(count_automorphisms(named_family("bowtie", 2)), 8u);
  EXPECT_EQ(count_automorphisms(Graph(1, {})), 1u);
  EXPECT_THROW(count_automorphisms(Graph(3, {{0, 1}})), PreconditionError);
}

TEST(Groups, CapIsEnforced) {
  EXPECT_THROW(automorphisms(named_family("complete", 5), 100), CapacityError);
  EXPECT_EQ(automorphisms(named_family("complete", 5), 120).size(), 120u);
  // 9! = 362880 fits under the default cap; 10! does not.
  EXPECT_EQ(count_automorphisms(named_family("star", 9)), 362880u);
  EXPECT_THROW(count_automorphisms(named_family("star", 10)), CapacityError);
}

TEST(Groups, OrderingIdentityFirstThenLexicographic) {
  const auto group = automorphisms(named_family("cycle", 4));
  ASSERT_EQ(group.size(), 8u);
  EXPECT_TRUE(group.front().is_identity());
  for (std::size_t i = 2; i < group.size(); ++i) EXPECT_LT(group[i - 1], group[i]);
}

TEST(Groups, MatchBruteForceOnAllSmallGraphs) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const auto expected = oracle::all_automorphisms(g);
      const auto got = automorphisms(g);
      // Brute force is lexicographic, with the identity first already.
      ASSERT_EQ(perms(got), expected) << to_edge_list(g);
      ASSERT_EQ(has_nontrivial_automorphism(g), expected.size() > 1);
    }
  }
}

TEST(Groups, MatchBruteForceOnRandomSevenVertexGraphs) {
  std::mt19937_64 rng(3);
  int seen = 0;
  while (seen < 60) {
    std::vector<Edge> e;
    for (int i = 0; i < 7; ++i) {
      for (int j = i + 1; j < 7; ++j) {
        if (rng() % 3 == 0) e.emplace_back(i, j);
      }
    }
    const Graph g(7, e);
    if (!is_connected(g)) continue;
    ++seen;
    ASSERT_EQ(perms(automorphisms(g)), oracle::all_automorphisms(g)) << to_edge_list(g);
  }
}

TEST(Rigidity, SevenVertexTrees) {
  // Leaves 0 and 4 both hang from 1, so swapping them is an automorphism.
  const Graph caterpillar(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {5, 6}});
  EXPECT_TRUE(has_nontrivial_automorphism(caterpillar));
  EXPECT_EQ(oracle::all_automorphisms(caterpillar).size(), 2u);
  // Legs of length 1, 2 and 3 from a common centre: the smallest asymmetric tree.
  const Graph spider(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
  EXPECT_FALSE(has_nontrivial_automorphism(spider));
  EXPECT_EQ(oracle::all_automorphisms(spider).size(), 1u);
}

TEST(Predicate, IsAutomorphism) {
  const Graph p3 = named_family("path", 3);
  EXPECT_TRUE(is_automorphism(p3, std::vector<Vertex>{2, 1, 0}));
  EXPECT_FALSE(is_automorphism(p3, std::vector<Vertex>{1, 0, 2}));
  EXPECT_FALSE(is_automorphism(p3, std::vector<Vertex>{0, 0, 2}));
  EXPECT_FALSE(is_automorphism(p3, std::vector<Vertex>{0, 1}));
}

TEST(Visitor, StopsEarly) {
  std::size_t calls = 0;
  const std::size_t visited = for_each_automorphism(named_family("complete", 5), [&](const Automorphism&) {
    return ++calls < 3;
  });
  EXPECT_EQ(calls, 3u);
  EXPECT_EQ(visited, 3u);
}

TEST(Action, DartsAndCycles) {
  const Graph c4 = named_family("cycle", 4);
  const Automorphism reflect({0, 3, 2, 1});
  EXPECT_EQ(apply_to_dart(c4, reflect, {0, 1}), (Dart{0, 3}));
  EXPECT_THROW(apply_to_dart(c4, reflect, {0, 2}), PreconditionError);
  EXPECT_THROW(apply_to_dart(c4, Automorphism::identity(3), {0, 1}), PreconditionError);
  const OrientedCycle c({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const OrientedCycle img = image_cycle(reflect, c);
  EXPECT_TRUE(img.same_oriented(c.reversed()));
  EXPECT_TRUE(image_cycle(Automorphism({1, 2, 3, 0}), c).same_oriented(c));
}

}  // namespace
}  // namespace homrep
