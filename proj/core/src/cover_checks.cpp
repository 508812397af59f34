#include "tropica/cover_checks.hpp"

#include <vector>

#include "tropica/errors.hpp"

namespace tropica::graphs {

std::optional<int> check_balancing(std::span<const WeightedFlag> flags, int num_directions) {
  if (num_directions < 1) throw ArgumentError("need at least one direction");
  std::vector<int> sums(static_cast<std::size_t>(num_directions), 0);
  for (const auto& f : flags) {
    if (f.weight <= 0) throw ArgumentError("flag weights must be positive");
    if (f.direction < 0 || f.direction >= num_directions) throw ArgumentError("flag direction out of range");
    sums[static_cast<std::size_t>(f.direction)] += f.weight;
  }
  for (int s : sums)
    if (s != sums.front()) return std::nullopt;
  if (sums.front() == 0) return std::nullopt;
  return sums.front();
}

int local_rh_defect(int local_degree, int target_genus, int source_genus, std::span<const int> flag_weights) {
  int ramification = 0;
  for (int w : flag_weights) ramification += w - 1;
  return local_degree * (2 - 2 * target_genus) - ramification - (2 - 2 * source_genus);
}

}  // namespace tropica::graphs
