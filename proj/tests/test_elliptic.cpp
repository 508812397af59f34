#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "tropica/canonical.hpp"
#include "tropica/elliptic_covers.hpp"
#include "tropica/errors.hpp"
#include "tropica/sym_oracle.hpp"

using namespace tropica;
using namespace tropica::elliptic;

TEST(Elliptic, FeynmanGraphs) {
  EXPECT_EQ(enumerate_feynman_graphs(2).size(), 1u);
  EXPECT_EQ(enumerate_feynman_graphs(2, true).size(), 2u);
  EXPECT_EQ(enumerate_feynman_graphs(3).size(), 2u);
  EXPECT_EQ(enumerate_feynman_graphs(3, true).size(), 5u);
  for (const auto& g : enumerate_feynman_graphs(3, true)) {
    EXPECT_EQ(g.num_vertices(), 4);
    EXPECT_EQ(g.num_edges(), 6);
    EXPECT_EQ(g.first_betti(), 3);
    for (int v = 0; v < 4; ++v) EXPECT_EQ(g.valence(v), 3);
  }
  EXPECT_THROW(enumerate_feynman_graphs(1), ArgumentError);
}

TEST(Elliptic, LabeledCoversHaveDegreeAsTotalMultidegree) {
  for (const auto& g : enumerate_feynman_graphs(2))
    for (const auto& order : feynman::all_orders(g.num_vertices()))
      for (int d = 1; d <= 4; ++d)
        for (const auto& c : labeled_covers(g, order, d)) {
          const auto a = c.multidegree();
          EXPECT_EQ(std::accumulate(a.begin(), a.end(), 0), d);
        }
}

TEST(Elliptic, CountByMultidegreeSumsToTotal) {
  const auto graphs = enumerate_feynman_graphs(2);
  const auto& g = graphs[0];
  const feynman::VertexOrder order = {0, 1};
  Rational sum = 0;
  std::map<std::vector<int>, Rational> by_a;
  for (const auto& c : labeled_covers(g, order, 3)) by_a[c.multidegree()] += Rational(c.weight_product());
  for (const auto& [a, v] : by_a) {
    EXPECT_EQ(count_labeled_covers(g, order, a), v);
    sum += v;
  }
  Rational direct = 0;
  for (const auto& c : labeled_covers(g, order, 3)) direct += Rational(c.weight_product());
  EXPECT_EQ(sum, direct);
}

TEST(Elliptic, ThreeRoutesAgree) {
  for (int d = 1; d <= 5; ++d) {
    const Rational oracle = oracle::hurwitz_elliptic(d, 2);
    EXPECT_EQ(simple_hurwitz_tropical(d, 2), oracle) << "d=" << d;
    EXPECT_EQ(simple_hurwitz_direct(d, 2), oracle) << "d=" << d;
  }
  for (int d = 1; d <= 3; ++d) {
    const Rational oracle = oracle::hurwitz_elliptic(d, 3);
    EXPECT_EQ(simple_hurwitz_tropical(d, 3), oracle) << "d=" << d;
    EXPECT_EQ(simple_hurwitz_direct(d, 3), oracle) << "d=" << d;
  }
}

TEST(Elliptic, LoopGraphsNeverBalance) {
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(loop_graph_assignments(d, 2), 0u);
  for (int d = 1; d <= 3; ++d) EXPECT_EQ(loop_graph_assignments(d, 3), 0u);
}

TEST(Elliptic, CoversClosedUnderReflection) {
  for (int d = 2; d <= 4; ++d) {
    const auto covers = enumerate_elliptic_covers(d, 2);
    for (const auto& c : covers) {
      EXPECT_TRUE(is_valid_cover(c)) << c.key();
      const auto r = c.reflected();
      EXPECT_EQ(r.reflected(), c);
      const auto it = std::find(covers.begin(), covers.end(), r);
      ASSERT_NE(it, covers.end()) << c.key();
      EXPECT_EQ(multiplicity(*it).value, multiplicity(c).value);
    }
  }
}

TEST(Elliptic, DegreeFourGenusTwoMultiplicities) {
  const auto covers = enumerate_elliptic_covers(4, 2);
  ASSERT_EQ(covers.size(), 12u);
  std::multiset<Rational> values;
  Rational total = 0;
  for (const auto& c : covers) {
    const auto m = multiplicity(c);
    values.insert(m.value);
    total += m.value;
  }
  EXPECT_EQ(total, 60);
  EXPECT_EQ(values, (std::multiset<Rational>{1, 1, 1, 1, 2, 2, 6, 6, 8, 8, 12, 12}));
  for (int v : {8, 12, 6, 2, 1}) {
    bool paired = false;
    for (const auto& c : covers)
      if (multiplicity(c).value == v && !(c.reflected() == c)) paired = true;
    EXPECT_TRUE(paired) << v;
  }
}

TEST(Elliptic, MultiplicityAutomorphismsMatchRepeatedRecords) {
  for (const auto& c : enumerate_elliptic_covers(4, 2)) {
    const auto m = multiplicity(c);
    std::map<std::tuple<int, int, int, int>, int> runs;
    for (const auto& e : c.edges) ++runs[{e.tail, e.head, e.weight, e.crossings}];
    std::uint64_t brute = 1;
    for (const auto& [record, n] : runs)
      for (int i = 2; i <= n; ++i) brute *= static_cast<std::uint64_t>(i);
    EXPECT_EQ(m.automorphisms, brute);
  }
}
