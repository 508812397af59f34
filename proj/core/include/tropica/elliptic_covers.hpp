#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropica/feynman_series.hpp"
#include "tropica/multigraph.hpp"
#include "tropica/rational.hpp"

namespace tropica::elliptic {

/// Connected 3-valent graphs of genus g (2g - 2 vertices, 3g - 3 edges), one
/// per isomorphism class, sorted by canonical encoding. Loop-free unless
/// `allow_loops`. Vertex i is x_{i+1}, edge k is q_{k+1}. ArgumentError for g < 2.
std::vector<graphs::Multigraph> enumerate_feynman_graphs(int genus, bool allow_loops = false);

/// Behaviour of one edge of a labeled cover: it leaves `tail` clockwise, has
/// weight `weight` and passes the base point p_0 `crossings` times.
struct EdgeData {
  int tail = 0;
  int weight = 0;
  int crossings = 0;
  friend auto operator<=>(const EdgeData&, const EdgeData&) = default;
};

/// A labeled tropical cover of the circle with source `graph` and order `order`.
struct LabeledCover {
  std::vector<EdgeData> edges;  // indexed like graph edges
  std::vector<int> multidegree() const;
  BigInt weight_product() const;
};

/// Every admissible edge assignment for (graph, order) of degree d, optionally
/// restricted to one multidegree. For a_k = 0 the edge runs from its lower to
/// its higher vertex with weight in 1..d; for a_k > 0 its weight divides a_k
/// and it may leave either endpoint. Loops (allowed here only to show that they
/// never balance) must cross p_0. Every vertex is balanced.
std::vector<LabeledCover> labeled_covers(const graphs::Multigraph& graph, const feynman::VertexOrder& order,
                                         int degree, const std::vector<int>* multidegree = nullptr);

/// N^Gamma_{a,Omega}: sum of weight products of the labeled covers with multidegree a.
Rational count_labeled_covers(const graphs::Multigraph& graph, const feynman::VertexOrder& order,
                              const std::vector<int>& multidegree);

/// sum_Gamma 1/|Aut Gamma| sum_Omega sum_{|a| = d} N^Gamma_{a,Omega}.
Rational simple_hurwitz_tropical(int degree, int genus);

/// An unlabeled cover: the vertex over p_i is vertex i - 1; bounded edges are
/// records (tail position, head position, weight, crossings).
struct EllipticCover {
  struct Edge {
    int tail = 0;
    int head = 0;
    int weight = 0;
    int crossings = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };
  int degree = 0;
  int genus = 0;
  std::vector<Edge> edges;  // sorted

  graphs::Multigraph source() const;
  std::vector<std::int64_t> half_edge_colors() const;
  /// Mirror image: orientation of the circle reversed, with the base point
  /// moved into the arc between p_1 and p_2 (an involution when there are
  /// two branch points). Positions are relabeled clockwise from the new base point.
  EllipticCover reflected() const;
  std::string key() const;
  friend bool operator==(const EllipticCover& a, const EllipticCover& b) { return a.edges == b.edges; }
};

struct EllipticMultiplicity {
  BigInt weight_product;
  std::uint64_t automorphisms = 0;
  Rational value;
};

/// Direct enumeration of isomorphism classes of covers of degree d by genus-g
/// sources, built from edge records without reference to Feynman graphs.
/// Candidate sources with loops are generated too and discarded by balancing.
std::vector<EllipticCover> enumerate_elliptic_covers(int degree, int genus);

/// prod w / |Aut|, with |Aut| counted by brute force and compared to the
/// product of factorials of repeated edge records (CrossCheckError otherwise).
EllipticMultiplicity multiplicity(const EllipticCover& cover);

/// Sum of multiplicities over enumerate_elliptic_covers.
Rational simple_hurwitz_direct(int degree, int genus);

/// Number of balanced assignments over all 3-valent genus-g graphs that have
/// a loop, all orders, degree d (expected to vanish).
std::uint64_t loop_graph_assignments(int degree, int genus);

/// Balancing and local Riemann-Hurwitz checks for a cover.
bool is_valid_cover(const EllipticCover& cover);

}  // namespace tropica::elliptic
