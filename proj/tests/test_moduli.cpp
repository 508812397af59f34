#include <gtest/gtest.h>

#include <set>

#include "tropica/canonical.hpp"
#include "tropica/errors.hpp"
#include "tropica/moduli_space.hpp"

using namespace tropica;
using namespace tropica::moduli;

namespace {

std::size_t count_dimension(const std::vector<CombinatorialType>& types, int dim) {
  std::size_t n = 0;
  for (const auto& t : types) n += t.dimension == dim;
  return n;
}

std::size_t double_factorial(int n) {
  std::size_t r = 1;
  for (int k = n; k > 1; k -= 2) r *= static_cast<std::size_t>(k);
  return r;
}

}  // namespace

TEST(Moduli, SmallCounts) {
  const auto m04 = enumerate_types(0, 4);
  EXPECT_EQ(m04.size(), 4u);
  EXPECT_EQ(max_dimension(0, 4), 1);
  EXPECT_EQ(count_dimension(m04, 1), 3u);

  const auto m12 = enumerate_types(1, 2);
  EXPECT_EQ(m12.size(), 5u);
  EXPECT_EQ(max_dimension(1, 2), 2);
  const auto poset = build_poset(m12);
  std::size_t folded_max = 0;
  for (std::size_t i = 0; i < m12.size(); ++i) folded_max += m12[i].dimension == 2 && poset.folded[i];
  EXPECT_EQ(folded_max, 1u);

  const auto m20 = enumerate_types(2, 0);
  EXPECT_EQ(max_dimension(2, 0), 3);
  EXPECT_EQ(count_dimension(m20, 3), 2u);
}

TEST(Moduli, GenusZeroMaximalTypesAreTrivalentTrees) {
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(count_dimension(enumerate_types(0, n), n - 3), double_factorial(2 * n - 5)) << n;
}

TEST(Moduli, TypesAreStableAndDistinct) {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 0}}) {
    const auto types = enumerate_types(g, n);
    std::set<std::string> keys;
    for (const auto& t : types) {
      EXPECT_TRUE(is_stable(t.graph));
      EXPECT_TRUE(t.graph.is_connected());
      EXPECT_EQ(t.graph.total_genus(), g);
      EXPECT_EQ(t.graph.num_legs(), n);
      EXPECT_EQ(t.dimension, t.graph.num_edges());
      EXPECT_LE(t.dimension, max_dimension(g, n));
      EXPECT_EQ(t.key, graphs::canonical_encoding(t.graph));
      keys.insert(t.key);
    }
    EXPECT_EQ(keys.size(), types.size());
  }
}

TEST(Moduli, PosetIsGradedAndPure) {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 2}, {2, 0}, {1, 3}}) {
    const auto types = enumerate_types(g, n);
    const auto poset = build_poset(types);
    std::vector<bool> below(types.size(), false);
    for (auto [a, b] : poset.covers) {
      EXPECT_EQ(types[static_cast<std::size_t>(a)].dimension + 1, types[static_cast<std::size_t>(b)].dimension);
      below[static_cast<std::size_t>(a)] = true;
    }
    for (std::size_t i = 0; i < types.size(); ++i)
      if (types[i].dimension < max_dimension(g, n)) EXPECT_TRUE(below[i]) << types[i].key;
    // contracting every edge of every type lands in the list
    std::set<std::string> keys;
    for (const auto& t : types) keys.insert(t.key);
    for (const auto& t : types)
      for (int e = 0; e < t.graph.num_edges(); ++e)
        EXPECT_TRUE(keys.count(graphs::canonical_encoding(contract_any_edge(t.graph, e))));
  }
}

TEST(Moduli, LoopContractionRaisesGenus) {
  graphs::Multigraph g(1);
  g.add_edge(0, 0);
  g.add_leg(0, 1);
  const auto c = contract_any_edge(g, 0);
  EXPECT_EQ(c.num_edges(), 0);
  EXPECT_EQ(c.genus(0), 1);
}

TEST(Moduli, Guards) {
  EXPECT_THROW(enumerate_types(0, 2), ArgumentError);
  EXPECT_THROW(enumerate_types(1, 0), ArgumentError);
  EXPECT_THROW(enumerate_types(0, 10), SizeGuardError);
  EXPECT_THROW(enumerate_types(5, 0), SizeGuardError);
}
