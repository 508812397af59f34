#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropica/multigraph.hpp"
#include "tropica/partition.hpp"
#include "tropica/rational.hpp"

namespace tropica::line {

/// A tropical double Hurwitz cover, recorded relative to its s levels.
///
/// Level k (1-based) hosts source vertex k - 1. Bounded edges run from a lower
/// level to a higher one. Left ends carry the parts of mu, right ends the
/// parts of nu. Equal-weight ends at the same vertex and side are
/// interchangeable, as are parallel edges of equal weight.
struct LineCover {
  struct Edge {
    int lo = 0;
    int hi = 0;
    int weight = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };
  struct End {
    int level = 0;
    int weight = 0;
    friend auto operator<=>(const End&, const End&) = default;
  };

  int genus = 0;
  Partition mu;
  Partition nu;
  int num_levels = 0;
  std::vector<Edge> edges;      // sorted
  std::vector<End> left_ends;   // sorted
  std::vector<End> right_ends;  // sorted

  /// Source graph: vertex k - 1 at level k, edges in `edges` order, then
  /// legs for left ends followed by right ends (all unlabeled).
  graphs::Multigraph source() const;
  /// Colors used for automorphism counting: vertices by level, half-edges
  /// by direction (towards lower or higher levels) and weight.
  std::vector<std::int64_t> vertex_colors() const;
  std::vector<std::int64_t> half_edge_colors() const;

  /// Deterministic text key, e.g. "L1:3 E1-2:1 E1-2:2 R2:3".
  std::string key() const;

  friend bool operator==(const LineCover& a, const LineCover& b) { return a.key() == b.key(); }
};

struct CoverMultiplicity {
  BigInt weight_product;
  int forks = 0;
  int wieners = 0;
  Rational value;
  std::uint64_t automorphisms = 0;
};

int num_branch_points(int genus, const Partition& mu, const Partition& nu);

/// Isomorphism classes of tropical double Hurwitz covers, sorted by key.
/// Throws ArgumentError when |mu| != |nu| or genus < 0, UnsupportedError when s <= 0.
std::vector<LineCover> enumerate_line_covers(int genus, const Partition& mu, const Partition& nu);

/// prod w(e) / 2^(f+w). The brute-force automorphism count of the cover is
/// also computed; a disagreement with 2^(f+w) raises CrossCheckError.
CoverMultiplicity multiplicity(const LineCover& cover);

/// H_g^trop(mu, nu): sum of multiplicities.
Rational double_hurwitz_tropical(int genus, const Partition& mu, const Partition& nu);

/// Count with all ends labeled: |Aut mu| |Aut nu| H_g^trop(mu, nu).
Rational double_hurwitz_labeled(int genus, const Partition& mu, const Partition& nu);

/// Local checks on one cover: every vertex 3-valent, balanced, local Riemann-Hurwitz defect 1,
/// source connected of first Betti number `genus`.
bool is_valid_cover(const LineCover& cover);

}  // namespace tropica::line
