#include <gtest/gtest.h>

#include <random>

#include "ktfree/bounds.hpp"
#include "ktfree/cliques.hpp"
#include "ktfree/minors.hpp"
#include "oracles.hpp"

using namespace ktfree;

namespace {

// Integer form C(t-2,k-1) n - (k-1) C(t-1,k).
BigInt integer_form(std::int64_t n, std::int64_t t, std::int64_t k) {
  return binomial(t - 2, k - 1) * n - binomial(t - 1, k) * (k - 1);
}

}  // namespace

TEST(LowerBound, KnownShapes) {
  for (std::int64_t n = 3; n <= 40; ++n) {
    EXPECT_EQ(lower_bound_kcliques(n, 5, 3), 3 * n - 8);
    EXPECT_EQ(lower_bound_kcliques(n, 5, 2), 3 * n - 6);
    EXPECT_EQ(lower_bound_kcliques(n, 4, 2), 2 * n - 3);
    EXPECT_EQ(lower_bound_kcliques(n, 4, 3), n - 2);
    if (n >= 5) EXPECT_EQ(lower_bound_kcliques(n, 7, 1), n);
    if (n >= 7) EXPECT_EQ(lower_bound_kcliques(n, 9, 3), 21 * n - 112);
    EXPECT_EQ(lower_bound_total(n, 5), 8 * n - 16);
    EXPECT_EQ(lower_bound_total(n, 4), 4 * n - 4);
    if (n >= 6) EXPECT_EQ(extremal_total(n, 8).value, 64 * (n - 5));
  }
  EXPECT_EQ(lower_bound_total(20, 9), 1792);
  for (std::int64_t t = 2; t <= 12; ++t) EXPECT_EQ(lower_bound_total(t - 2, t), pow2(t - 2));
  EXPECT_THROW((void)lower_bound_kcliques(5, 3, 3), ArgumentError);
  EXPECT_THROW((void)lower_bound_kcliques(1, 5, 2), ArgumentError);
}

TEST(LowerBound, IntegerRewriting) {
  for (std::int64_t t = 3; t <= 30; ++t)
    for (std::int64_t k = 1; k < t; ++k)
      for (std::int64_t n = t - 2; n <= 60; ++n) ASSERT_EQ(lower_bound_kcliques(n, t, k), integer_form(n, t, k));
}

TEST(LowerBound, BinomialIdentity) {
  for (std::int64_t t = 3; t <= 30; ++t)
    for (std::int64_t n = t - 2; n <= 200; ++n) {
      BigInt sum = 1;
      for (std::int64_t k = 1; k <= t - 1; ++k) sum += lower_bound_kcliques(n, t, k);
      ASSERT_EQ(sum, lower_bound_total(n, t)) << "t=" << t << " n=" << n;
    }
}

TEST(EllTreeFormulas, MatchEnumeration) {
  for (std::int64_t ell = 1; ell <= 8; ++ell)
    for (std::int64_t n = ell; n <= 30; n += 3) {
      const CliqueVector cv = clique_vector(ell_tree(static_cast<std::size_t>(ell), static_cast<std::size_t>(n), 42));
      for (std::int64_t k = 0; k <= ell + 1; ++k) EXPECT_EQ(cv[static_cast<std::size_t>(k)], ell_tree_kcliques(ell, n, k));
      EXPECT_EQ(cv.total(), ell_tree_total(ell, n));
    }
}

TEST(Extremal, Values) {
  const ExtremalRecord r = extremal_kcliques(10, 8, 2);
  EXPECT_EQ(r.value, 40);
  EXPECT_TRUE(r.exceptional);
  EXPECT_EQ(r.witness, WitnessFamily::kCockadeK22222);

  EXPECT_EQ(extremal_kcliques(13, 8, 2).value, 57);
  EXPECT_FALSE(extremal_kcliques(13, 8, 2).exceptional);
  EXPECT_EQ(extremal_kcliques(11, 9, 3).value, 120);
  EXPECT_TRUE(extremal_kcliques(11, 9, 3).exceptional);
  EXPECT_EQ(extremal_kcliques(12, 9, 2).value, 57);
  EXPECT_EQ(extremal_kcliques(12, 9, 2).witness, WitnessFamily::kK22233);
  EXPECT_EQ(extremal_total(12, 9).value, 768);
  EXPECT_EQ(extremal_total(6, 8).value, 64);
  EXPECT_EQ(extremal_kcliques(4, 6, 2).value, 6);
  EXPECT_EQ(extremal_kcliques(4, 6, 2).witness, WitnessFamily::kCompleteGraph);

  EXPECT_THROW((void)extremal_kcliques(10, 10, 2), UnsupportedError);
  EXPECT_THROW((void)extremal_total(10, 2), UnsupportedError);
  EXPECT_THROW((void)extremal_kcliques(10, 5, 5), ArgumentError);
}

TEST(Extremal, ExceptionalSets) {
  for (std::int64_t t = 3; t <= 9; ++t)
    for (std::int64_t k = 1; k < t; ++k)
      for (std::int64_t n = t - 1; n <= 60; ++n) {
        const ExtremalRecord r = extremal_kcliques(n, t, k);
        const bool expected = (t == 8 && k == 2 && n >= 10 && n % 5 == 0) ||
                              (t == 9 && k == 2 && ((n >= 11 && n % 5 == 1) || n == 12)) ||
                              (t == 9 && k == 3 && n == 11);
        EXPECT_EQ(r.exceptional, expected) << t << "," << k << "," << n;
        if (n >= t - 2) {
          EXPECT_GE(r.value, lower_bound_kcliques(n, t, k));
          EXPECT_EQ(r.value, lower_bound_kcliques(n, t, k) + (expected ? 1 : 0));
        }
      }
}

TEST(Extremal, ExceptionalWitnessesAttain) {
  for (std::int64_t n = 10; n <= 40; n += 5) {
    const Graph g = extremal_witness_graph(n, 8, WitnessFamily::kCockadeK22222);
    EXPECT_EQ(static_cast<std::int64_t>(g.order()), n);
    EXPECT_EQ(static_cast<std::int64_t>(g.edge_count()), 6 * n - 20);
    EXPECT_EQ(BigInt(g.edge_count()), extremal_kcliques(n, 8, 2).value);
  }
  for (std::int64_t n = 11; n <= 41; n += 5) {
    const Graph g = extremal_witness_graph(n, 9, WitnessFamily::kCockadeK122222);
    EXPECT_EQ(BigInt(g.edge_count()), extremal_kcliques(n, 9, 2).value);
  }
  const Graph k22233 = extremal_witness_graph(12, 9, WitnessFamily::kK22233);
  EXPECT_EQ(k22233.edge_count(), 57u);
  EXPECT_EQ(clique_vector(extremal_witness_graph(11, 9, WitnessFamily::kCockadeK122222))[3], 120);
  EXPECT_THROW((void)extremal_witness_graph(12, 8, WitnessFamily::kCockadeK22222), ArgumentError);
  EXPECT_THROW((void)extremal_witness_graph(11, 9, WitnessFamily::kK22233), ArgumentError);
}

TEST(Zykov, Values) {
  EXPECT_EQ(zykov_kcliques(10, 3, 2), 25);
  EXPECT_EQ(zykov_kcliques(9, 4, 3), 27);
  EXPECT_EQ(zykov_total(8, 5), 81);
  EXPECT_EQ(zykov_kcliques(7, 3, 2), Rational(49, 4));
  // Turan graphs meet the bound whenever t-1 divides n.
  for (std::size_t t = 3; t <= 7; ++t)
    for (std::size_t n = t - 1; n <= 14; n += t - 1) {
      const CliqueVector cv = clique_vector(turan_graph(n, t));
      for (std::size_t k = 0; k < t; ++k)
        EXPECT_EQ(Rational(cv[k]), zykov_kcliques(static_cast<std::int64_t>(n), static_cast<std::int64_t>(t), static_cast<std::int64_t>(k)));
      EXPECT_EQ(Rational(cv.total()), zykov_total(static_cast<std::int64_t>(n), static_cast<std::int64_t>(t)));
    }
}

TEST(Paste, Counts) {
  EXPECT_EQ(paste_count_k(40, 40, 5, 2), 70);
  EXPECT_EQ(paste_count_total(243, 243, 5), 454);
  EXPECT_EQ(paste_count_k(17, binomial(6, 3), 6, 3), 17);

  const Graph h = complete_multipartite(MultipartiteSpec::pairs(5));
  const auto q = *least_clique(h, 5);
  EXPECT_EQ(clique_vector(paste(h, h, q, q)).total(), 454);
}

TEST(Cockade, ClosedForms) {
  EXPECT_EQ(cockade_cliques(5, 10, 3), 80);
  EXPECT_EQ(cockade_cliques(5, 15, 2), 70);
  for (std::int64_t n = 10; n <= 40; n += 5) EXPECT_EQ(Rational(cockade_cliques(5, n, 5)), Rational(31, 5) * (n - 5) + 1);
  for (std::int64_t c = 2; c <= 7; ++c)
    for (std::int64_t copies = 1; copies <= 4; ++copies) {
      const std::int64_t n = c * (copies + 1);
      const Graph g = cockade({complete_multipartite(MultipartiteSpec::pairs(c)), static_cast<std::size_t>(c),
                               static_cast<std::size_t>(copies)});
      ASSERT_EQ(static_cast<std::int64_t>(g.order()), n);
      const CliqueVector cv = clique_vector(g);
      for (std::int64_t k = 0; k <= c; ++k) EXPECT_EQ(cv[static_cast<std::size_t>(k)], cockade_cliques(c, n, k));
      EXPECT_EQ(cv.total(), cockade_total(c, n));
    }
  EXPECT_THROW((void)cockade_cliques(5, 12, 2), ArgumentError);
  EXPECT_THROW((void)cockade_total(5, 5), ArgumentError);
}

TEST(Degenerate, Bound) {
  for (std::int64_t d = 0; d <= 8; ++d)
    for (std::int64_t k = 1; k <= d + 1; ++k) EXPECT_EQ(degenerate_bound(d, d + 1, k), binomial(d + 1, k));
  for (std::int64_t n = 3; n <= 30; ++n) EXPECT_EQ(degenerate_bound(2, n, 3), n - 2);
  EXPECT_EQ(degenerate_bound(8, 10, 3), 112);
  EXPECT_LE(clique_vector(complete_multipartite(MultipartiteSpec::pairs(5)))[3], degenerate_bound(8, 10, 3));

  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(2 + static_cast<std::size_t>(i % 19), 0.1 + 0.8 * (i % 9) / 8.0, rng);
    const auto d = static_cast<std::int64_t>(degeneracy(g).degeneracy);
    const auto n = static_cast<std::int64_t>(g.order());
    if (n < d + 1) continue;
    const CliqueVector cv = clique_vector(g);
    for (std::int64_t k = 1; k <= d + 1; ++k) EXPECT_LE(cv[static_cast<std::size_t>(k)], degenerate_bound(d, n, k));
  }
}

TEST(TopClique, Values) {
  EXPECT_EQ(top_clique_bound(20, 5), 17);
  EXPECT_EQ(clique_vector(ell_tree(3, 20))[4], 17);
  for (std::int64_t t = 2; t <= 12; ++t) EXPECT_EQ(top_clique_bound(t - 1, t), 1);
  EXPECT_EQ(top_clique_bound(12, 9), 5);
  EXPECT_EQ(lower_bound_kcliques(12, 9, 8), 5);
}

TEST(TriangleBound, Values) {
  EXPECT_EQ(triangle_bound_6conn(10, 40), 90);
  for (std::int64_t n = 10; n <= 50; ++n) EXPECT_EQ(triangle_bound_6conn(n, 7 * n - 28), 21 * n - 112);
  EXPECT_EQ(triangle_bound_6conn(7, 21), 35);
}

TEST(K222Condition, Values) {
  const K222Condition six = k222_condition(6, 2);
  EXPECT_TRUE(six.holds);
  EXPECT_EQ(six.lhs, 40);
  EXPECT_EQ(six.rhs, 40);
  const K222Condition eight = k222_condition(8, 2);
  EXPECT_FALSE(eight.holds);
  EXPECT_EQ(eight.lhs, 56);
  EXPECT_EQ(eight.rhs, 55);
  EXPECT_THROW((void)k222_condition(7, 2), ArgumentError);
  EXPECT_THROW((void)k222_condition(8, 0), ArgumentError);
}

TEST(K222Condition, MatchesDirectComparison) {
  for (std::int64_t c = 2; c <= 60; c += 2) {
    const std::int64_t t = 3 * c / 2 + 1;
    for (std::int64_t k = 1; k <= c; ++k)
      ASSERT_EQ(k222_condition(c, k).holds, binomial(c, k) * pow2(k) <= integer_form(2 * c, t, k)) << c << "," << k;
  }
}
