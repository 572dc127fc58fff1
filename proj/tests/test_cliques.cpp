#include <gtest/gtest.h>

#include <random>

#include "ktfree/cliques.hpp"
#include "ktfree/constructions.hpp"
#include "oracles.hpp"

using namespace ktfree;

TEST(CliqueVector, NamedGraphs) {
  EXPECT_EQ(clique_vector(complete_multipartite(MultipartiteSpec::pairs(5))).total(), 243);

  const CliqueVector cv = clique_vector(complete_multipartite(MultipartiteSpec::pairs(5, 1)));
  EXPECT_EQ(cv[3], 120);
  EXPECT_EQ(cv[4], 160);
  EXPECT_EQ(cv[5], 112);
  EXPECT_EQ(cv.total(), 486);

  EXPECT_EQ(clique_vector(Graph(5)), CliqueVector({1, 5}));
  EXPECT_EQ(clique_vector(Graph(0)), CliqueVector({1}));
  EXPECT_EQ(count_cliques_k(complete_multipartite(MultipartiteSpec({2, 2, 2, 3, 3})), 5), 72);
  EXPECT_EQ(count_cliques_k(ell_tree(3, 9), 0), 1);
}

TEST(CliqueVector, PairsFormula) {
  for (std::int64_t c = 1; c <= 10; ++c) {
    const CliqueVector cv = clique_vector(complete_multipartite(MultipartiteSpec::pairs(c)));
    for (std::int64_t k = 0; k <= c + 1; ++k) EXPECT_EQ(cv[static_cast<std::size_t>(k)], binomial(c, k) * pow2(k));
  }
}

TEST(CliqueVector, MatchesSubsetOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 16);
    const Graph g = oracle::random_graph(n, 0.2 + 0.6 * (i % 7) / 6.0, rng);
    EXPECT_EQ(clique_vector(g), CliqueVector(oracle::clique_counts(g)));
  }
}

TEST(CliqueVector, ThreadCountDoesNotMatter) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const Graph g = oracle::random_graph(60, 0.5, rng);
    EXPECT_EQ(clique_vector(g, 1), clique_vector(g, 4));
  }
}

TEST(CliqueVector, LargeCountsSpillToBigInt) {
  const Graph k = complete_graph(kMaxVertices);
  const CliqueVector cv = clique_vector(k, 2);
  for (std::size_t j = 0; j <= kMaxVertices; ++j)
    ASSERT_EQ(cv[j], binomial(static_cast<std::int64_t>(kMaxVertices), static_cast<std::int64_t>(j)));
  EXPECT_EQ(cv.total(), pow2(static_cast<std::int64_t>(kMaxVertices)));
}

TEST(CliqueTally, MachineWordOverflowSpills) {
  detail::CliqueTally tally(3);
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  tally.add(2, max);
  tally.add(2, max);
  tally.add(2, 5);
  tally.add(1, BigInt(7));
  std::vector<BigInt> out(5, 0);
  tally.merge_into(out);
  EXPECT_EQ(out[2], BigInt(max) * 2 + 5);
  EXPECT_EQ(out[1], 7);
}

TEST(CliqueVector, DeletionIdentity) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(4 + static_cast<std::size_t>(i % 12), 0.55, rng);
    const CliqueVector all = clique_vector(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const CliqueVector rest = clique_vector(g.without(v));
      const CliqueVector link = clique_vector(neighborhood_subgraph(g, v));
      for (std::size_t k = 1; k <= all.size(); ++k) ASSERT_EQ(all[k], rest[k] + link[k - 1]);
    }
  }
}

TEST(CliqueVector, ChargingIdentity) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(4 + static_cast<std::size_t>(i % 12), 0.55, rng);
    const CliqueVector all = clique_vector(g);
    for (std::size_t k = 1; k <= all.size(); ++k) {
      BigInt sum = 0;
      for (Vertex v = 0; v < g.order(); ++v) sum += clique_vector(neighborhood_subgraph(g, v))[k - 1];
      ASSERT_EQ(sum, BigInt(k) * all[k]);
    }
  }
}

TEST(MaxClique, Values) {
  for (std::int64_t c = 1; c <= 8; ++c) EXPECT_EQ(max_clique(complete_multipartite(MultipartiteSpec::pairs(c))), static_cast<std::size_t>(c));
  EXPECT_EQ(max_clique(complete_graph(7)), 7u);
  EXPECT_EQ(max_clique(turan_graph(12, 5)), 4u);
  EXPECT_EQ(max_clique(Graph(0)), 0u);
  EXPECT_EQ(max_clique(Graph(3)), 1u);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(12, 0.5, rng);
    EXPECT_EQ(max_clique(g), clique_vector(g).clique_number());
  }
}

TEST(Multipartite, ElementarySymmetric) {
  for (std::int64_t n = 1; n <= 11; ++n)
    for (const auto& parts : oracle::partitions(n)) {
      const MultipartiteSpec spec(parts);
      const CliqueVector cv = clique_vector(complete_multipartite(spec));
      const auto e = oracle::elementary_symmetric(parts);
      for (std::size_t k = 0; k < e.size(); ++k) ASSERT_EQ(cv[k], e[k]);
      EXPECT_EQ(spec.kclique_counts(), e);
      EXPECT_EQ(cv.total(), spec.total_cliques());
    }
}
