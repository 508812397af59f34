#include <gtest/gtest.h>

#include <algorithm>

#include "formulas.hpp"
#include "tropica/canonical.hpp"
#include "tropica/errors.hpp"
#include "tropica/line_covers.hpp"
#include "tropica/sym_oracle.hpp"

using namespace tropica;
using namespace tropica::line;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST(LineCovers, GenusOneDegreeThreeTotallyRamified) {
  const auto covers = enumerate_line_covers(1, P({3}), P({3}));
  ASSERT_EQ(covers.size(), 1u);
  const auto m = multiplicity(covers[0]);
  EXPECT_EQ(m.value, 2);
  EXPECT_EQ(m.weight_product, 2);
  EXPECT_EQ(m.wieners, 0);
  EXPECT_EQ(m.forks, 0);
  EXPECT_EQ(double_hurwitz_tropical(1, P({3}), P({3})), 2);
}

TEST(LineCovers, SimpleDegreeTwo) {
  EXPECT_EQ(double_hurwitz_tropical(0, P({1, 1}), P({1, 1})), Rational(1, 2));
  EXPECT_EQ(double_hurwitz_tropical(0, P({2}), P({1, 1})), Rational(1, 2));
}

TEST(LineCovers, TwoOneToTwoOne) {
  const auto covers = enumerate_line_covers(0, P({2, 1}), P({2, 1}));
  ASSERT_EQ(covers.size(), 2u);
  std::vector<Rational> values;
  for (const auto& c : covers) values.push_back(multiplicity(c).value);
  std::sort(values.begin(), values.end());
  EXPECT_EQ(values, (std::vector<Rational>{1, 3}));
  EXPECT_EQ(double_hurwitz_tropical(0, P({2, 1}), P({2, 1})), 4);
}

TEST(LineCovers, LabeledCount) {
  EXPECT_EQ(double_hurwitz_tropical(0, P({3, 1}), P({2, 2})), 3);
  EXPECT_EQ(double_hurwitz_labeled(0, P({3, 1}), P({2, 2})), 6);
}

TEST(LineCovers, CoversAreValidAndDistinct) {
  for (int g = 0; g <= 1; ++g)
    for (const auto& mu : partitions_of(4))
      for (const auto& nu : partitions_of(4)) {
        if (num_branch_points(g, mu, nu) <= 0) continue;
        const auto covers = enumerate_line_covers(g, mu, nu);
        std::vector<std::string> sources;
        for (const auto& c : covers) {
          EXPECT_TRUE(is_valid_cover(c)) << c.key();
          EXPECT_EQ(c.num_levels, num_branch_points(g, mu, nu));
        }
        for (std::size_t i = 0; i < covers.size(); ++i)
          for (std::size_t j = i + 1; j < covers.size(); ++j) EXPECT_NE(covers[i].key(), covers[j].key());
      }
}

TEST(LineCovers, AutomorphismsArePowersOfTwo) {
  for (int d = 2; d <= 4; ++d)
    for (int g = 0; g <= 2; ++g)
      for (const auto& mu : partitions_of(d))
        for (const auto& nu : partitions_of(d)) {
          if (num_branch_points(g, mu, nu) <= 0) continue;
          for (const auto& c : enumerate_line_covers(g, mu, nu)) {
            const auto m = multiplicity(c);
            const auto aut = graphs::count_colored_automorphisms(c.source(), c.vertex_colors(), c.half_edge_colors());
            EXPECT_EQ(aut, std::uint64_t{1} << (m.forks + m.wieners)) << c.key();
          }
        }
}

TEST(LineCovers, MatchesOracleUpToDegreeFour) {
  for (int d = 1; d <= 4; ++d)
    for (int g = 0; g <= 2; ++g)
      for (const auto& mu : partitions_of(d))
        for (const auto& nu : partitions_of(d)) {
          if (num_branch_points(g, mu, nu) <= 0) continue;
          EXPECT_EQ(double_hurwitz_tropical(g, mu, nu), oracle::hurwitz_line(g, mu, nu))
              << "g=" << g << " mu=" << mu.to_string() << " nu=" << nu.to_string();
        }
}

TEST(LineCovers, OnePartClosedFormula) {
  for (int d = 1; d <= 5; ++d)
    for (int g = 0; g <= 2; ++g)
      for (const auto& nu : partitions_of(d)) {
        if (num_branch_points(g, P({d}), nu) <= 0) continue;
        if (g == 2 && d == 5 && nu.length() > 3) continue;
        EXPECT_EQ(double_hurwitz_tropical(g, P({d}), nu), tropica::testing::one_part_hurwitz(g, nu))
            << "g=" << g << " nu=" << nu.to_string();
      }
}

TEST(LineCovers, SymmetricInMuAndNu) {
  for (const auto& mu : partitions_of(4))
    for (const auto& nu : partitions_of(4)) {
      if (num_branch_points(1, mu, nu) <= 0) continue;
      EXPECT_EQ(double_hurwitz_tropical(1, mu, nu), double_hurwitz_tropical(1, nu, mu));
    }
}

TEST(LineCovers, Errors) {
  EXPECT_THROW(enumerate_line_covers(0, P({2}), P({1, 1, 1})), ArgumentError);
  EXPECT_THROW(enumerate_line_covers(0, P({2}), P({2})), UnsupportedError);
  EXPECT_THROW(enumerate_line_covers(-1, P({2}), P({2})), ArgumentError);
}
