#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tropica/rational.hpp"

namespace tropica {

/// An integer partition: parts stored weakly decreasing, all positive.
class Partition {
public:
  Partition() = default;
  /// Sorts the parts; throws ArgumentError on a non-positive part or an empty list.
  explicit Partition(std::vector<int> parts);

  /// Parses "3,1", "3 1" or "(3,1)".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  /// Order of the centralizer of a permutation of this cycle type: prod_i m_i! i^{m_i}.
  BigInt centralizer_order() const;
  /// prod_i m_i!, the number of relabelings of equal parts.
  BigInt part_symmetry_order() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n), (n-1,1), ...).
std::vector<Partition> partitions_of(int n);

}  // namespace tropica
