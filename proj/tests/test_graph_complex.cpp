#include <gtest/gtest.h>

#include "tropica/canonical.hpp"
#include "tropica/errors.hpp"
#include "tropica/graph_complex.hpp"

using namespace tropica;
using namespace tropica::gc;

namespace {

graphs::Multigraph reorder_edges(const graphs::Multigraph& g, const std::vector<int>& order) {
  graphs::Multigraph out(g.num_vertices());
  for (int e : order) out.add_edge(g.edge(e).first, g.edge(e).second);
  return out;
}

}  // namespace

TEST(GraphComplex, DifferentialSquaresToZero) {
  for (int g = 2; g <= 4; ++g)
    for (int n = g + 2; n <= 3 * g - 3; ++n) {
      const auto outer = differential_matrix(g, n - 1);
      const auto inner = differential_matrix(g, n);
      if (outer.rows() == 0 || outer.cols() == 0 || inner.cols() == 0) continue;
      EXPECT_TRUE((outer * inner).is_zero()) << "g=" << g << " n=" << n;
    }
  for (int g = 2; g <= 4; ++g)
    for (int n = g + 1; n <= 3 * g - 3; ++n)
      for (const auto& x : generators(g, n)) EXPECT_TRUE(differential(differential(chain_of(x))).is_zero());
}

TEST(GraphComplex, NormalFormIsIdempotent) {
  for (int g = 3; g <= 4; ++g)
    for (int n = g + 1; n <= 3 * g - 3; ++n)
      for (const auto& x : generators(g, n)) {
        const auto once = normalize(x);
        ASSERT_EQ(once.sign, 1);
        const auto twice = normalize(once.graph);
        EXPECT_EQ(twice.key, once.key);
        EXPECT_EQ(twice.sign, 1);
        EXPECT_EQ(normalize(graphs::decode_canonical(once.key)).sign, 1);
      }
}

TEST(GraphComplex, EdgeTranspositionFlipsSign) {
  const auto gens = generators(3, 6);
  ASSERT_EQ(gens.size(), 1u);
  const auto& x = gens[0];
  std::vector<int> order = {1, 0, 2, 3, 4, 5};
  const auto swapped = normalize(reorder_edges(x, order));
  EXPECT_EQ(swapped.key, normalize(x).key);
  EXPECT_EQ(swapped.sign, -1);
  std::vector<int> cycle = {1, 2, 0, 3, 4, 5};
  EXPECT_EQ(normalize(reorder_edges(x, cycle)).sign, 1);
  EXPECT_EQ(normalize(x.permute_vertices({3, 2, 1, 0})).sign, 1);
}

TEST(GraphComplex, ParallelEdgesVanish) {
  graphs::Multigraph theta(2);
  for (int i = 0; i < 3; ++i) theta.add_edge(0, 1);
  EXPECT_EQ(normalize(theta).sign, 0);
  EXPECT_TRUE(chain_of(theta).is_zero());
}

TEST(GraphComplex, RejectsNonGenerators) {
  graphs::Multigraph loop(1);
  loop.add_edge(0, 0);
  EXPECT_THROW(normalize(loop), ArgumentError);
  graphs::Multigraph path(2);
  path.add_edge(0, 1);
  EXPECT_THROW(normalize(path), ArgumentError);
  EXPECT_THROW(homology_dimension(5, 10), UnsupportedError);
  EXPECT_THROW(homology_dimension(1, 2), UnsupportedError);
}

TEST(GraphComplex, Wheels) {
  EXPECT_TRUE(wheel_class(2).is_zero());
  EXPECT_TRUE(wheel_class(4).is_zero());
  const auto w3 = wheel_class(3);
  EXPECT_FALSE(w3.is_zero());
  EXPECT_TRUE(differential(w3).is_zero());
  EXPECT_FALSE(is_boundary(w3));
  EXPECT_EQ(homology_dimension(3, 6), 1u);
  const auto w5 = wheel_class(5);
  EXPECT_FALSE(w5.is_zero());
  EXPECT_TRUE(differential(w5).is_zero());
}

TEST(GraphComplex, GenusFourHasNoHomology) {
  for (int n = 5; n <= 9; ++n) EXPECT_EQ(homology_dimension(4, n), 0u) << n;
}

TEST(GraphComplex, EulerCharacteristicMatchesHomology) {
  for (int g = 2; g <= 4; ++g) {
    long chi_chain = 0;
    long chi_homology = 0;
    for (int n = g + 1; n <= 3 * g - 3; ++n) {
      const long sign = n % 2 ? -1 : 1;
      chi_chain += sign * static_cast<long>(generators(g, n).size());
      chi_homology += sign * static_cast<long>(homology_dimension(g, n));
    }
    EXPECT_EQ(chi_chain, chi_homology) << g;
  }
}
