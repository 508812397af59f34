#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "tropica/canonical.hpp"
#include "tropica/elliptic_covers.hpp"
#include "tropica/errors.hpp"
#include "tropica/feynman_series.hpp"
#include "tropica/sym_oracle.hpp"

using namespace tropica;
using namespace tropica::feynman;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int qb, int xb) {
  TruncatedSeries s(2, 1, qb, xb);
  std::uniform_int_distribution<int> x(-xb / 3, xb / 3), q(0, qb), c(-5, 5);
  for (int i = 0; i < 8; ++i) s.add_term({x(rng), x(rng), q(rng)}, Rational(c(rng), 1 + (i % 3)));
  return s;
}

void for_each_multidegree(int edges, int total, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> a(static_cast<std::size_t>(edges), 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == edges) {
      visit(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[static_cast<std::size_t>(k)] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, total);
}

}  // namespace

TEST(Feynman, Sigma) {
  for (long n = 1; n <= 30; ++n) {
    long s = 0;
    for (long i = 1; i <= n; ++i)
      if (n % i == 0) s += i;
    EXPECT_EQ(sigma(n), s);
  }
  EXPECT_THROW(sigma(0), ArgumentError);
}

TEST(Feynman, EisensteinE2) {
  const auto e2 = eisenstein_e2(5);
  const std::vector<long> expected = {1, -24, -72, -96, -168, -144};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(e2.coefficient({n}), expected[static_cast<std::size_t>(n)]);
  EXPECT_EQ(e2.coefficient({6}), 0);
}

TEST(Feynman, SeriesAlgebra) {
  std::mt19937 rng(11);
  TruncatedSeries one(2, 1, 4, 6);
  one.add_term({0, 0, 0}, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 4, 6);
    const auto b = random_series(rng, 4, 6);
    const auto c = random_series(rng, 4, 6);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * one, a);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ((a * b).truncated(k), a.truncated(k) * b.truncated(k));
  }
}

TEST(Feynman, BoundsDropTerms) {
  TruncatedSeries s(1, 1, 2, 3);
  s.add_term({4, 0}, 1);
  s.add_term({0, 3}, 1);
  EXPECT_TRUE(s.is_zero());
  s.add_term({-3, 2}, 2);
  EXPECT_EQ(s.coefficient({-3, 2}), 2);
}

TEST(Feynman, PropagatorRejectsLoops) {
  EXPECT_THROW(propagator_factor(2, 1, 0, 0, true, 0, 2), UnsupportedError);
}

TEST(Feynman, AllOrders) {
  const auto orders = all_orders(3);
  ASSERT_EQ(orders.size(), 6u);
  EXPECT_EQ(orders.front(), (VertexOrder{0, 1, 2}));
  EXPECT_EQ(orders.back(), (VertexOrder{2, 1, 0}));
}

TEST(Feynman, RefinedCoefficientsCountLabeledCovers) {
  struct Case {
    int genus;
    int total;
  };
  for (const auto& [genus, total] : std::vector<Case>{{2, 4}, {3, 3}}) {
    for (const auto& g : elliptic::enumerate_feynman_graphs(genus)) {
      for (const auto& order : all_orders(g.num_vertices())) {
        const auto refined = refined_integral(g, order, total);
        for (const auto& [e, c] : refined.terms())
          for (int x : e) EXPECT_EQ(x % 2, 0);
        for_each_multidegree(g.num_edges(), total, [&](const std::vector<int>& a) {
          EXPECT_EQ(refined_coefficient(refined, a), elliptic::count_labeled_covers(g, order, a));
        });
      }
    }
  }
}

TEST(Feynman, TruncationStability) {
  for (const auto& g : elliptic::enumerate_feynman_graphs(2)) {
    for (const auto& order : all_orders(g.num_vertices())) {
      auto previous = refined_integral(g, order, 1);
      for (int d = 2; d <= 4; ++d) {
        const auto next = refined_integral(g, order, d);
        EXPECT_EQ(next.truncated(2 * (d - 1)), previous);
        EXPECT_EQ(coarse_integral(g, order, d).truncated(2 * (d - 1)), coarse_integral(g, order, d - 1));
        previous = next;
      }
    }
  }
}

TEST(Feynman, MirrorGenusTwo) {
  const auto report = mirror_check(2, 4);
  EXPECT_TRUE(report.all_agree);
  for (int d = 1; d <= 4; ++d) {
    EXPECT_EQ(report.feynman[static_cast<std::size_t>(d - 1)], oracle::hurwitz_elliptic(d, 2));
    EXPECT_EQ(report.hurwitz[static_cast<std::size_t>(d - 1)], report.feynman[static_cast<std::size_t>(d - 1)]);
  }
}

TEST(Feynman, GraphSumOddPowersVanish) {
  for (const auto& g : elliptic::enumerate_feynman_graphs(2))
    for (const auto& order : all_orders(g.num_vertices())) {
      const auto coarse = coarse_integral(g, order, 3);
      for (int k = 1; k <= 6; k += 2) EXPECT_EQ(coarse.coefficient({k}), 0);
    }
}
