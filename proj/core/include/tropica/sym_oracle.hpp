#pragma once

#include <vector>

#include "tropica/partition.hpp"
#include "tropica/rational.hpp"

namespace tropica::oracle {

inline constexpr int kMaxOracleDegree = 6;

struct OracleOptions {
  /// Lifts the degree guard (d > kMaxOracleDegree).
  bool force = false;
  /// Multiply transpositions on the right of the running product instead of on the left.
  bool right_multiply = false;
  /// Optional relabeling of {0..d-1} applied to the fixed representative of type mu.
  std::vector<int> relabel;
};

/// (1/d!) #{(s0, t1..ts, sinf) : s0 of type mu, ti transpositions,
/// sinf of type nu, sinf ts ... t1 s0 = id, generating a transitive group},
/// with s = 2g - 2 + l(mu) + l(nu).
Rational hurwitz_line(int genus, const Partition& mu, const Partition& nu, const OracleOptions& options = {});

/// (1/d!) #{(a, b, t1..t_{2g-2}) : a b a^-1 b^-1 t_{2g-2} ... t1 = id, transitive}.
Rational hurwitz_elliptic(int degree, int genus, const OracleOptions& options = {});

/// Cycle type of a permutation given in one-line notation.
Partition cycle_type(const std::vector<int>& perm);

/// A permutation of cycle type `p` in one-line notation: consecutive blocks are cycles.
std::vector<int> standard_representative(const Partition& p);

}  // namespace tropica::oracle
