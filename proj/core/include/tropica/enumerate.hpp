#pragma once

#include <functional>
#include <vector>

#include "tropica/multigraph.hpp"

namespace tropica::graphs {

struct EnumerationOptions {
  bool allow_loops = true;
  bool allow_parallel = true;
};

/// One connected representative per isomorphism class of multigraphs with the
/// given vertex valences (legs included). Legs are labeled 1..num_legs when
/// num_legs > 0. Results are sorted by canonical encoding and are themselves
/// canonical representatives. An infeasible degree sequence yields an empty list.
std::vector<Multigraph> enumerate_graphs(int num_vertices,
                                         std::vector<int> degree_sequence,
                                         int num_legs,
                                         EnumerationOptions options = {});

/// Calls `visit(multiplicities)` for every symmetric edge-multiplicity matrix
/// (row-major, n x n, diagonal = loop counts) whose vertex degrees equal
/// `targets` (a loop adds 2).
void for_each_edge_multiset(const std::vector<int>& targets,
                            EnumerationOptions options,
                            const std::function<void(const std::vector<int>&)>& visit);

}  // namespace tropica::graphs
