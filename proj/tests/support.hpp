#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tropica/multigraph.hpp"

namespace tropica::testing {

/// Same abstract graph with shuffled vertex, edge and leg order and flipped edge ends.
inline graphs::Multigraph random_relabel(const graphs::Multigraph& g, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.num_vertices()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  graphs::Multigraph out(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) out.set_genus(perm[static_cast<std::size_t>(v)], g.genus(v));

  std::vector<int> edge_order(static_cast<std::size_t>(g.num_edges()));
  std::iota(edge_order.begin(), edge_order.end(), 0);
  std::shuffle(edge_order.begin(), edge_order.end(), rng);
  std::bernoulli_distribution flip(0.5);
  for (int e : edge_order) {
    auto [a, b] = g.edge(e);
    if (flip(rng)) std::swap(a, b);
    out.add_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  }
  std::vector<int> leg_order(static_cast<std::size_t>(g.num_legs()));
  std::iota(leg_order.begin(), leg_order.end(), 0);
  std::shuffle(leg_order.begin(), leg_order.end(), rng);
  for (int j : leg_order) out.add_leg(perm[static_cast<std::size_t>(g.leg(j).vertex)], g.leg(j).label);
  return out;
}

/// Automorphisms by exhaustive search over vertex and half-edge permutations.
/// Only for graphs with at most 8 half-edges.
inline std::uint64_t brute_force_automorphisms(const graphs::Multigraph& g) {
  const int n = g.num_vertices();
  const int h = g.num_half_edges();
  std::vector<int> vp(static_cast<std::size_t>(n));
  std::iota(vp.begin(), vp.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = g.genus(v) == g.genus(vp[static_cast<std::size_t>(v)]);
    if (!ok) continue;
    std::vector<int> hp(static_cast<std::size_t>(h));
    std::iota(hp.begin(), hp.end(), 0);
    do {
      bool good = true;
      for (int x = 0; x < h && good; ++x) {
        const int y = hp[static_cast<std::size_t>(x)];
        good = g.vertex_of(y) == vp[static_cast<std::size_t>(g.vertex_of(x))] && g.is_leg(x) == g.is_leg(y);
        if (good && g.is_leg(x)) good = g.leg_label_of(x) == g.leg_label_of(y);
        if (good && !g.is_leg(x)) good = hp[static_cast<std::size_t>(g.partner(x))] == g.partner(y);
      }
      if (good) ++count;
    } while (std::next_permutation(hp.begin(), hp.end()));
  } while (std::next_permutation(vp.begin(), vp.end()));
  return count;
}

/// Isomorphism test by trying every vertex bijection (small graphs only).
inline bool brute_force_isomorphic(const graphs::Multigraph& a, const graphs::Multigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() || a.num_legs() != b.num_legs())
    return false;
  const int n = a.num_vertices();
  auto edge_multiset = [](const graphs::Multigraph& g, const std::vector<int>& p) {
    std::vector<std::pair<int, int>> es;
    for (auto [x, y] : g.edges()) {
      int u = p[static_cast<std::size_t>(x)], v = p[static_cast<std::size_t>(y)];
      es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    return es;
  };
  auto leg_multiset = [](const graphs::Multigraph& g, const std::vector<int>& p) {
    std::vector<std::pair<int, int>> ls;
    for (const auto& l : g.legs()) ls.emplace_back(p[static_cast<std::size_t>(l.vertex)], l.label);
    std::sort(ls.begin(), ls.end());
    return ls;
  };
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  const auto eb = edge_multiset(b, id);
  const auto lb = leg_multiset(b, id);
  std::vector<int> p(id);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = a.genus(v) == b.genus(p[static_cast<std::size_t>(v)]);
    if (ok && edge_multiset(a, p) == eb && leg_multiset(a, p) == lb) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace tropica::testing
