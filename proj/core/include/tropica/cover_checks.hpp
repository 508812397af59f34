#pragma once

#include <optional>
#include <span>

namespace tropica::graphs {

/// A half-edge at a source vertex of a tropical cover: its weight and the
/// target direction (flag of the image vertex) it maps onto.
struct WeightedFlag {
  int weight = 0;
  int direction = 0;
};

/// Local degree d_v when every one of the `num_directions` target directions
/// receives the same total weight; std::nullopt when the vertex is unbalanced.
/// Throws ArgumentError for non-positive weights or directions out of range.
std::optional<int> check_balancing(std::span<const WeightedFlag> flags, int num_directions = 2);

/// Local Riemann-Hurwitz quantity
///   d_v (2 - 2 g(v')) - sum_f (w(f) - 1) - (2 - 2 g(v)),
/// which must be >= 0 at every point of a tropical Hurwitz cover.
int local_rh_defect(int local_degree, int target_genus, int source_genus,
                    std::span<const int> flag_weights);

}  // namespace tropica::graphs
