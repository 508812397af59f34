#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tropica/multigraph.hpp"
#include "tropica/rational.hpp"

namespace tropica::feynman {

/// Vertices listed in increasing order: order[i] is the vertex over p_{i+1}.
using VertexOrder = std::vector<int>;

/// sum of the divisors of n; ArgumentError for n < 1.
BigInt sigma(long n);

/// Laurent polynomial in x_1..x_nx (exponents of any sign) and polynomial in
/// q_1..q_nq, truncated at total q-degree `q_bound` and |x exponent| <= `x_bound`.
class TruncatedSeries {
public:
  using Exponents = std::vector<int>;  // x exponents, then q exponents

  TruncatedSeries(int num_x, int num_q, int q_bound, int x_bound);

  int num_x() const { return num_x_; }
  int num_q() const { return num_q_; }
  int q_bound() const { return q_bound_; }
  int x_bound() const { return x_bound_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponents& e) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * monomial; silently drops monomials outside the bounds.
  void add_term(const Exponents& e, const Rational& c);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return multiply(a, b); }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Product truncated to the bounds of `a`; `keep` may veto further monomials.
  static TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b,
                                  const std::function<bool(const Exponents&)>& keep = {});

  /// Terms constant in every x variable, as a series without x variables.
  TruncatedSeries constant_term_in_x() const;
  /// Sets every q_k to a single variable q.
  TruncatedSeries collapse_q() const;
  /// Restricts to total q-degree <= bound.
  TruncatedSeries truncated(int q_bound) const;

  std::string to_string() const;

private:
  int num_x_;
  int num_q_;
  int q_bound_;
  int x_bound_;
  std::map<Exponents, Rational> terms_;
};

/// 1 - 24 sum_{n <= q_bound} sigma(n) q^n, one q variable.
TruncatedSeries eisenstein_e2(int q_bound);

/// Expansion of the propagator for the edge q_{q_index} joining x_{k1}, x_{k2}
/// when x_{k1} is the smaller vertex in the order (k1_lower) or not:
///   sum_{w<=d} w (x_lo/x_hi)^{2w}
///   + sum_{a<=d} sum_{w|a} w ((x_k1/x_k2)^{2w} + (x_k2/x_k1)^{2w}) q^{2a}.
/// Throws UnsupportedError when k1 == k2 (loop edge).
TruncatedSeries propagator_factor(int num_x, int num_q, int k1, int k2, bool k1_lower, int q_index, int d);

/// Constant term in all x of the product of the propagator factors of `g`
/// (edge k uses q_{k+1}), truncated at total q-degree 2d.
TruncatedSeries refined_integral(const graphs::Multigraph& g, const VertexOrder& order, int d);

/// refined_integral with every q_k set to q.
TruncatedSeries coarse_integral(const graphs::Multigraph& g, const VertexOrder& order, int d);

/// Coefficient of q_1^{2a_1} ... q_n^{2a_n} in the refined integral.
Rational refined_coefficient(const TruncatedSeries& refined, const std::vector<int>& a);

struct MirrorReport {
  int genus = 0;
  int dmax = 0;
  std::vector<Rational> hurwitz;   // index d-1: N_{d,g}^trop
  std::vector<Rational> feynman;   // index d-1: q^{2d} coefficient of the graph sum
  std::vector<bool> agree;
  bool all_agree = true;
};

/// Compares sum_d N_{d,g}^trop q^{2d} with sum_Gamma 1/|Aut Gamma| sum_Omega I_{Gamma,Omega}(q).
MirrorReport mirror_check(int genus, int dmax);

/// Graph sum of coarse integrals: index d-1 holds the q^{2d} coefficient.
std::vector<Rational> feynman_graph_sum(int genus, int dmax);

/// All orders of the vertices 0..n-1 (lexicographic).
std::vector<VertexOrder> all_orders(int n);

}  // namespace tropica::feynman
