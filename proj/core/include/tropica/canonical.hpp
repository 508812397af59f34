#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tropica/multigraph.hpp"

namespace tropica::graphs {

/// Result of canonical labeling.
///
/// `encoding` is equal for two graphs iff they are isomorphic (vertex genus
/// and leg labels respected). `vertex_perm[v]` is the canonical index of
/// vertex v and `half_edge_perm[h]` the canonical index of half-edge h in
/// `graph`, the canonical representative.
struct CanonicalForm {
  std::string encoding;
  std::vector<int> vertex_perm;
  std::vector<int> half_edge_perm;
  Multigraph graph;
};

CanonicalForm canonical_form(const Multigraph& g);

/// Cheaper than canonical_form when only the isomorphism key is needed.
std::string canonical_encoding(const Multigraph& g);

/// Rebuilds the canonical representative from an encoding.
Multigraph decode_canonical(const std::string& encoding);

/// All vertex permutations (old index -> canonical index) that realize the
/// canonical encoding. Any two differ by a vertex automorphism.
std::vector<std::vector<int>> canonical_vertex_maps(const Multigraph& g);

/// Order of the automorphism group acting on vertices and half-edges:
/// incidence, the involution, leg labels and vertex genus are preserved.
std::uint64_t automorphism_group_order(const Multigraph& g);

/// Counts automorphisms of `g` that additionally preserve per-vertex and
/// per-half-edge colors, by backtracking over vertex and half-edge images.
/// Used for tropical covers, where colors carry levels, weights and directions.
std::uint64_t count_colored_automorphisms(const Multigraph& g,
                                          const std::vector<std::int64_t>& vertex_colors,
                                          const std::vector<std::int64_t>& half_edge_colors);

}  // namespace tropica::graphs
