#include "tropica/sym_oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "tropica/errors.hpp"

namespace tropica::oracle {

namespace {

using u128 = unsigned __int128;
using Perm = std::array<std::uint8_t, 8>;

BigInt to_bigint(u128 x) {
  const auto hi = static_cast<std::uint64_t>(x >> 64);
  const auto lo = static_cast<std::uint64_t>(x);
  BigInt out = BigInt(std::to_string(hi));
  out <<= 64;
  out += BigInt(std::to_string(lo));
  return out;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t pack(const Perm& p, int d) {
  std::uint64_t key = 0;
  for (int i = 0; i < d; ++i) key |= std::uint64_t{p[static_cast<std::size_t>(i)]} << (4 * i);
  return key;
}

Perm unpack(std::uint64_t key, int d) {
  Perm p{};
  for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((key >> (4 * i)) & 0xF);
  return p;
}

// Set partitions as restricted growth strings, packed 4 bits per point.
std::uint64_t normalize_blocks(const std::array<int, 8>& block, int d) {
  std::array<int, 16> rename;
  rename.fill(-1);
  int next = 0;
  std::uint64_t key = 0;
  for (int i = 0; i < d; ++i) {
    int& r = rename[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])];
    if (r < 0) r = next++;
    key |= std::uint64_t(r) << (4 * i);
  }
  return key;
}

std::array<int, 8> blocks_of(std::uint64_t key, int d) {
  std::array<int, 8> b{};
  for (int i = 0; i < d; ++i) b[static_cast<std::size_t>(i)] = static_cast<int>((key >> (4 * i)) & 0xF);
  return b;
}

std::uint64_t merge_blocks(std::uint64_t key, int d, int a, int b) {
  auto blocks = blocks_of(key, d);
  const int ba = blocks[static_cast<std::size_t>(a)];
  const int bb = blocks[static_cast<std::size_t>(b)];
  if (ba == bb) return key;
  for (int i = 0; i < d; ++i)
    if (blocks[static_cast<std::size_t>(i)] == bb) blocks[static_cast<std::size_t>(i)] = ba;
  return normalize_blocks(blocks, d);
}

std::uint64_t join(std::uint64_t x, std::uint64_t y, int d) {
  const auto by = blocks_of(y, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (by[static_cast<std::size_t>(i)] == by[static_cast<std::size_t>(j)]) x = merge_blocks(x, d, i, j);
  return x;
}

bool single_block(std::uint64_t key) { return key == 0; }

std::uint64_t orbit_blocks(const std::vector<Perm>& gens, int d) {
  std::array<int, 8> block{};
  for (int i = 0; i < d; ++i) block[static_cast<std::size_t>(i)] = i;
  std::uint64_t key = normalize_blocks(block, d);
  for (const Perm& p : gens)
    for (int i = 0; i < d; ++i) key = merge_blocks(key, d, i, p[static_cast<std::size_t>(i)]);
  return key;
}

Perm compose(const Perm& outer, const Perm& inner, int d) {
  Perm r{};
  for (int i = 0; i < d; ++i)
    r[static_cast<std::size_t>(i)] = outer[inner[static_cast<std::size_t>(i)]];
  return r;
}

Perm inverse(const Perm& p, int d) {
  Perm r{};
  for (int i = 0; i < d; ++i) r[p[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm identity(int d) {
  Perm p{};
  for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

Perm transposition(int d, int a, int b) {
  Perm p = identity(d);
  std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
  return p;
}

Partition type_of(const Perm& p, int d) {
  return cycle_type(std::vector<int>(p.begin(), p.begin() + d));
}

struct StateHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
  }
};

using StateMap = std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, u128, StateHash>;

// Runs `steps` transposition multiplications from the given start states.
StateMap sweep(StateMap states, int d, int steps, bool right_multiply) {
  std::vector<Perm> transpositions;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      transpositions.push_back(transposition(d, a, b));
      pairs.emplace_back(a, b);
    }
  for (int step = 0; step < steps; ++step) {
    StateMap next;
    next.reserve(states.size() * 2);
    for (const auto& [key, count] : states) {
      const Perm current = unpack(key.first, d);
      for (std::size_t t = 0; t < transpositions.size(); ++t) {
        const Perm product = right_multiply ? compose(current, transpositions[t], d)
                                            : compose(transpositions[t], current, d);
        const auto blocks = merge_blocks(key.second, d, pairs[t].first, pairs[t].second);
        next[{pack(product, d), blocks}] += count;
      }
    }
    states = std::move(next);
  }
  return states;
}

void guard_degree(int d, const OracleOptions& options) {
  if (d > kMaxOracleDegree && !options.force)
    throw SizeGuardError("degree " + std::to_string(d) + " exceeds the oracle limit of " +
                         std::to_string(kMaxOracleDegree));
  if (d > 8) throw UnsupportedError("the oracle supports degree at most 8");
}

Perm to_perm(const std::vector<int>& v) {
  Perm p{};
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = static_cast<std::uint8_t>(v[i]);
  return p;
}

}  // namespace

Partition cycle_type(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(lengths);
}

std::vector<int> standard_representative(const Partition& p) {
  std::vector<int> perm(static_cast<std::size_t>(p.size()));
  int start = 0;
  for (int part : p.parts()) {
    for (int k = 0; k < part; ++k) perm[static_cast<std::size_t>(start + k)] = start + (k + 1) % part;
    start += part;
  }
  return perm;
}

Rational hurwitz_line(int genus, const Partition& mu, const Partition& nu, const OracleOptions& options) {
  if (genus < 0) throw ArgumentError("genus must be nonnegative");
  const int d = mu.size();
  if (nu.size() != d) throw ArgumentError("mu and nu must have the same size");
  const int s = 2 * genus - 2 + mu.length() + nu.length();
  if (s < 0) throw ArgumentError("no covers: 2g - 2 + l(mu) + l(nu) is negative");
  guard_degree(d, options);

  std::vector<int> rep = standard_representative(mu);
  if (!options.relabel.empty()) {
    const auto& r = options.relabel;
    if (static_cast<int>(r.size()) != d) throw ArgumentError("relabeling has wrong size");
    std::vector<int> conj(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) conj[static_cast<std::size_t>(r[static_cast<std::size_t>(i)])] = r[static_cast<std::size_t>(rep[static_cast<std::size_t>(i)])];
    rep = conj;
  }
  const Perm sigma0 = to_perm(rep);

  StateMap start;
  start[{pack(sigma0, d), orbit_blocks({sigma0}, d)}] = 1;
  const StateMap final_states = sweep(std::move(start), d, s, options.right_multiply);

  u128 fixed = 0;
  for (const auto& [key, count] : final_states) {
    if (!single_block(key.second)) continue;
    if (type_of(unpack(key.first, d), d) == nu) fixed += count;
  }
  // Every conjugate of sigma0 contributes equally: multiply by d!/z_mu, then divide by d!.
  Rational result(to_bigint(fixed), mu.centralizer_order());
  result.canonicalize();
  return result;
}

Rational hurwitz_elliptic(int degree, int genus, const OracleOptions& options) {
  if (degree < 1) throw ArgumentError("degree must be positive");
  if (genus < 1) throw ArgumentError("genus must be at least 1");
  if (genus > 3 && !options.force) throw SizeGuardError("genus above 3 exceeds the oracle limit");
  guard_degree(degree, options);
  const int d = degree;
  const int s = 2 * genus - 2;

  StateMap start;
  const Perm id = identity(d);
  start[{pack(id, d), orbit_blocks({}, d)}] = 1;
  const StateMap final_states = sweep(std::move(start), d, s, options.right_multiply);

  // Group pairs (a, b) by commutator and orbit partition of <a, b>.
  std::vector<int> base(static_cast<std::size_t>(d));
  std::iota(base.begin(), base.end(), 0);
  std::vector<Perm> all;
  do {
    all.push_back(to_perm(base));
  } while (std::next_permutation(base.begin(), base.end()));
  std::map<std::pair<std::uint64_t, std::uint64_t>, u128> pair_classes;
  for (const Perm& a : all) {
    const Perm ai = inverse(a, d);
    for (const Perm& b : all) {
      const Perm bi = inverse(b, d);
      const Perm comm = options.right_multiply
                            ? compose(compose(ai, bi, d), compose(a, b, d), d)
                            : compose(compose(a, b, d), compose(ai, bi, d), d);
      pair_classes[{pack(comm, d), orbit_blocks({a, b}, d)}] += 1;
    }
  }

  u128 total = 0;
  for (const auto& [key, count] : final_states) {
    const Perm t = unpack(key.first, d);
    const std::uint64_t needed = pack(inverse(t, d), d);
    auto it = pair_classes.lower_bound({needed, 0});
    for (; it != pair_classes.end() && it->first.first == needed; ++it)
      if (single_block(join(key.second, it->first.second, d))) total += count * it->second;
  }
  Rational result(to_bigint(total), factorial(d));
  result.canonicalize();
  return result;
}

}  // namespace tropica::oracle
