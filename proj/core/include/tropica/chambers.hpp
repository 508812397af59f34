#pragma once

#include <string>
#include <vector>

#include "tropica/polynomial.hpp"
#include "tropica/rational.hpp"

namespace tropica::chambers {

/// sum_i a_i mu_i + sum_j b_j nu_j
struct LinearForm {
  std::vector<int> mu;
  std::vector<int> nu;

  long evaluate(const std::vector<long>& mu_values, const std::vector<long>& nu_values) const;
  /// As a polynomial in mu_1..mu_lmu, nu_1..nu_lnu.
  Polynomial polynomial() const;
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// A lattice point (mu, nu) with |mu| = |nu| and all entries positive.
struct Point {
  std::vector<long> mu;
  std::vector<long> nu;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Chamber {
  int lmu = 0;
  int lnu = 0;
  /// +1 or -1 per wall, in the order of walls(lmu, lnu).
  std::vector<int> signs;
  Point witness;
};

/// Variable names "mu1", ..., "nu1", ...
std::vector<std::string> variable_names(int lmu, int lnu);

/// sum_{i in I} mu_i - sum_{j in J} nu_j for all I, J with I, J and both
/// complements nonempty, one per complementary pair (the one with 1 in I).
std::vector<LinearForm> walls(int lmu, int lnu);

/// Sign vectors of all walls realized by lattice points with entries in
/// [1, bound] (nu_lnu is determined by |mu| = |nu|); bound <= 0 selects
/// 2 * max(lmu, lnu) + 2. Each chamber carries the first witness in
/// increasing-size order. Chambers are sorted by sign vector, + before -.
std::vector<Chamber> chamber_decomposition(int lmu, int lnu, int bound = 0);

/// Lattice points of the open chamber with entries in [1, bound], in the same order as used for witnesses.
std::vector<Point> interior_points(const Chamber& chamber, int bound, std::size_t max_count);

/// Rewrites p on the slice |mu| = |nu| by eliminating nu_lnu.
Polynomial reduce_to_slice(const Polynomial& p, int lmu, int lnu);

/// Sum over trivalent trees with labeled ends of (number of level orderings)
/// times the product of the bounded-edge weight forms, reduced to the slice.
/// Throws UnsupportedError for lmu + lnu < 3 and ArgumentError for a witness on a wall.
Polynomial chamber_polynomial(const Chamber& chamber);

/// Same polynomial obtained by exact interpolation of tropical counts at
/// interior lattice points of the chamber.
Polynomial interpolate_chamber_polynomial(const Chamber& chamber);

/// Genus-0 double Hurwitz count with labeled ends at a lattice point.
Rational tropical_count(const Point& p);

/// The chamber containing `p`, given as the sign vector; an entry is 0 when p lies on that wall.
std::vector<int> sign_vector(int lmu, int lnu, const Point& p);

Rational evaluate(const Polynomial& p, const Point& point);

}  // namespace tropica::chambers
