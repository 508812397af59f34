#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropica/multigraph.hpp"

namespace tropica::moduli {

/// A combinatorial type of M_{g,n}^trop: a stable graph with vertex genera and legs labeled 1..n.
struct CombinatorialType {
  graphs::Multigraph graph;  // canonical representative
  std::string key;           // canonical encoding
  int dimension = 0;         // number of bounded edges
};

struct ConePoset {
  std::vector<CombinatorialType> types;
  /// (a, b): type a is obtained from type b by contracting one bounded edge.
  std::vector<std::pair<int, int>> covers;
  /// Automorphisms permute the bounded edges nontrivially (cone is glued to itself).
  std::vector<bool> folded;
};

/// Largest number of vertices of a stable graph, 2g - 2 + n; enumeration
/// refuses (SizeGuardError) beyond this bound unless `force`.
inline constexpr int kMaxModuliVertices = 7;

/// All stable types (2 g(v) - 2 + val(v) > 0 at every vertex), one per
/// isomorphism class, sorted by decreasing dimension then key.
/// ArgumentError when 2g - 2 + n <= 0.
std::vector<CombinatorialType> enumerate_types(int genus, int marks, bool force = false);

/// Contracting a loop removes it and raises the genus of its vertex by one.
graphs::Multigraph contract_any_edge(const graphs::Multigraph& g, int e);

ConePoset build_poset(const std::vector<CombinatorialType>& types);

/// Some automorphism moves a bounded edge to a different bounded edge.
bool is_folded(const graphs::Multigraph& g);

int max_dimension(int genus, int marks);

/// Stability of every vertex.
bool is_stable(const graphs::Multigraph& g);

}  // namespace tropica::moduli
