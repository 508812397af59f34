#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tropica/linalg.hpp"
#include "tropica/multigraph.hpp"
#include "tropica/rational.hpp"

namespace tropica::gc {

/// A generator [Gamma, Omega] rewritten as sign * [canonical graph, canonical order].
/// The edge order Omega of the input is its edge index order.
struct Normalized {
  std::string key;             // canonical encoding; empty when sign == 0
  graphs::Multigraph graph;    // canonical representative
  int sign = 0;                // 0 when an automorphism induces an odd edge permutation
};

/// ArgumentError for loops, vertices of valence < 3, legs or vertex genus.
Normalized normalize(const graphs::Multigraph& g);

/// Formal rational combination of normalized generators of fixed genus and edge count.
struct GraphChain {
  int genus = 0;
  int edges = 0;
  std::map<std::string, Rational> terms;

  void add(const std::string& key, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const GraphChain&, const GraphChain&) = default;
};

GraphChain chain_of(const graphs::Multigraph& g, const Rational& coefficient = 1);

/// d[Gamma, Omega] = sum_i (-1)^(i-1) [Gamma/q_i, Omega restricted]; contractions
/// that create a loop vanish.
GraphChain differential(const GraphChain& c);

/// Canonical graphs spanning G^(g)_n (nonzero normal form), sorted by key.
std::vector<graphs::Multigraph> generators(int genus, int edges);

/// Matrix of d: G_n -> G_{n-1} in the bases of generators().
RationalMatrix differential_matrix(int genus, int edges);

/// dim ker(d: G_n -> G_{n-1}) - rank(d: G_{n+1} -> G_n).
/// UnsupportedError outside 2 <= genus <= 4.
std::size_t homology_dimension(int genus, int edges);

/// True when the chain (with `edges` edges) lies in the image of d: G_{n+1} -> G_n.
bool is_boundary(const GraphChain& c);

/// Hub vertex 0 joined to rim vertices 1..g, rim cycle 1-2-...-g-1: spokes first, then rim edges.
graphs::Multigraph wheel_graph(int genus);
/// Normal form of W_g with its reference edge order; the zero chain for g = 2,
/// whose hub is only 2-valent.
GraphChain wheel_class(int genus);

}  // namespace tropica::gc
