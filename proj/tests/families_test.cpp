#include "homrep/families.hpp"

#include <gtest/gtest.h>

#include <random>

#include "homrep/classifier.hpp"
#include "homrep/errors.hpp"
#include "oracles.hpp"

namespace homrep {
namespace {

TEST(Spec, ParseAndValidate) {
  const auto s = RootedTreeSpec::parse("[-1, 0, 0,1]");
  EXPECT_EQ(std::vector<int>(s.parent().begin(), s.parent().end()), (std::vector<int>{-1, 0, 0, 1}));
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(RootedTreeSpec::parse(s.to_string()).to_string(), s.to_string());
  EXPECT_EQ(RootedTreeSpec::parse("-1").size(), 1);
  EXPECT_THROW(RootedTreeSpec({}), PreconditionError);
  EXPECT_THROW(RootedTreeSpec({0}), PreconditionError);
  EXPECT_THROW(RootedTreeSpec({-1, 1}), PreconditionError);
  EXPECT_THROW(RootedTreeSpec({-1, 0, -1}), PreconditionError);
  EXPECT_ANY_THROW(RootedTreeSpec::parse("[-1,x]"));
}

TEST(Periodic, SquareWithTails) {
  const auto fig = build_periodic_unicyclic(4, 2, {RootedTreeSpec({-1, 0}), RootedTreeSpec({-1, 0, 1})});
  EXPECT_EQ(to_edge_list(fig.graph), "n 10\n0 1\n0 3\n0 4\n1 2\n1 5\n2 3\n2 7\n3 8\n5 6\n8 9\n");
  EXPECT_EQ(fig.rotation, Automorphism({2, 3, 0, 1, 7, 8, 9, 4, 5, 6}));
  EXPECT_EQ(fig.rotation.order(), 2);
  // The reflection through 0 and 2 is the other symmetry; it reverses the cycle.
  EXPECT_EQ(oracle::all_automorphisms(fig.graph).size(), 4u);
  EXPECT_EQ(oracle::kernel_size(fig.graph), 2u);
}

TEST(Periodic, BareCycle) {
  const auto c6 = build_periodic_unicyclic(6, 1, {RootedTreeSpec({-1})});
  EXPECT_EQ(c6.graph, named_family("cycle", 6));
  EXPECT_EQ(c6.rotation.order(), 6);
}

TEST(Periodic, Guards) {
  const RootedTreeSpec leaf({-1, 0});
  EXPECT_THROW(build_periodic_unicyclic(4, 3, {leaf, leaf, leaf}), PreconditionError);
  EXPECT_THROW(build_periodic_unicyclic(3, 3, {leaf, leaf, leaf}), PreconditionError);
  EXPECT_THROW(build_periodic_unicyclic(2, 1, {leaf}), PreconditionError);
  EXPECT_THROW(build_periodic_unicyclic(6, 2, {leaf}), PreconditionError);
  EXPECT_THROW(build_periodic_unicyclic(6, 0, {}), PreconditionError);
}

TEST(Periodic, DistinctChains) {
  const auto g = build_periodic_unicyclic(6, 3, {RootedTreeSpec({-1}), RootedTreeSpec({-1, 0}),
                                                 RootedTreeSpec({-1, 0, 1})});
  EXPECT_EQ(g.graph.order(), 12);
  EXPECT_EQ(g.rotation.order(), 2);
  EXPECT_EQ(classify(g.graph), Verdict::periodic_unicyclic(3));
}

TEST(Periodic, RandomInstancesAreInTheKernel) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int n = k * (1 + static_cast<int>(rng() % 3)) + (k == 1 ? 2 : 0);
    if (n <= k) continue;
    std::vector<RootedTreeSpec> specs;
    for (int j = 0; j < k; ++j) specs.push_back(random_rooted_tree(3, rng));
    const auto inst = build_periodic_unicyclic(n, k, specs);
    ASSERT_TRUE(is_automorphism(inst.graph, inst.rotation.perm()));
    ASSERT_FALSE(classify(inst.graph).faithful);
  }
}

TEST(RandomTree, SizesAndParents) {
  std::mt19937_64 rng(1);
  std::vector<int> seen(6, 0);
  for (int i = 0; i < 500; ++i) {
    const auto t = random_rooted_tree(5, rng);
    ASSERT_GE(t.size(), 1);
    ASSERT_LE(t.size(), 5);
    ++seen[t.size()];
  }
  for (int s = 1; s <= 5; ++s) EXPECT_GT(seen[s], 0);
  EXPECT_THROW(random_rooted_tree(0, rng), PreconditionError);
}

TEST(Named, Families) {
  EXPECT_EQ(named_family("cycle", 3), Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(named_family("complete", 5).size(), 10u);
  EXPECT_EQ(named_family("complete", 1).order(), 1);
  EXPECT_EQ(named_family("star", 3), Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(named_family("path", 4), Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(named_family("bowtie", 2), Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(named_family("bowtie", 3).order(), 7);
  EXPECT_THROW(named_family("cycle", 2), PreconditionError);
  EXPECT_THROW(named_family("path", 0), PreconditionError);
  EXPECT_THROW(named_family("wheel", 5), PreconditionError);
}

}  // namespace
}  // namespace homrep
