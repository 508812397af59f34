#include "tropica/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "tropica/canonical.hpp"
#include "tropica/errors.hpp"

namespace tropica::graphs {

void for_each_edge_multiset(const std::vector<int>& targets, EnumerationOptions options,
                            const std::function<void(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(targets.size());
  std::vector<int> remaining = targets;
  std::vector<int> mult(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return mult[static_cast<std::size_t>(i * n + j)]; };

  // Distribute what is left of vertex i over partners j, j+1, ...; then move on.
  std::function<void(int, int)> spread;
  std::function<void(int)> next_vertex = [&](int i) {
    if (i == n) {
      visit(mult);
      return;
    }
    const int max_loops = options.allow_loops ? remaining[static_cast<std::size_t>(i)] / 2 : 0;
    for (int loops = max_loops; loops >= 0; --loops) {
      at(i, i) = loops;
      remaining[static_cast<std::size_t>(i)] -= 2 * loops;
      spread(i, i + 1);
      remaining[static_cast<std::size_t>(i)] += 2 * loops;
      at(i, i) = 0;
    }
  };
  spread = [&](int i, int j) {
    const int left = remaining[static_cast<std::size_t>(i)];
    if (left == 0) {
      next_vertex(i + 1);
      return;
    }
    if (j >= n) return;
    int cap = std::min(left, remaining[static_cast<std::size_t>(j)]);
    if (!options.allow_parallel) cap = std::min(cap, 1);
    // Capacity of the remaining partners bounds what must go to j.
    int later = 0;
    for (int k = j + 1; k < n; ++k) {
      const int r = remaining[static_cast<std::size_t>(k)];
      later += options.allow_parallel ? r : std::min(r, 1);
    }
    const int lowest = std::max(0, left - later);
    for (int k = cap; k >= lowest; --k) {
      at(i, j) = k;
      at(j, i) = k;
      remaining[static_cast<std::size_t>(i)] -= k;
      remaining[static_cast<std::size_t>(j)] -= k;
      spread(i, j + 1);
      remaining[static_cast<std::size_t>(i)] += k;
      remaining[static_cast<std::size_t>(j)] += k;
      at(i, j) = 0;
      at(j, i) = 0;
    }
  };
  next_vertex(0);
}

std::vector<Multigraph> enumerate_graphs(int num_vertices, std::vector<int> degree_sequence, int num_legs,
                                         EnumerationOptions options) {
  if (num_vertices < 0 || num_legs < 0) throw ArgumentError("negative count");
  if (static_cast<int>(degree_sequence.size()) != num_vertices)
    throw ArgumentError("degree sequence length differs from vertex count");
  for (int d : degree_sequence)
    if (d < 0) throw ArgumentError("negative valence");
  std::sort(degree_sequence.begin(), degree_sequence.end(), std::greater<>());

  std::map<std::string, Multigraph> classes;
  const int total = std::accumulate(degree_sequence.begin(), degree_sequence.end(), 0);
  if (num_vertices == 0 || total < num_legs || (total - num_legs) % 2 != 0) return {};

  std::vector<int> leg_vertex(static_cast<std::size_t>(num_legs), 0);
  std::vector<int> legs_at(static_cast<std::size_t>(num_vertices), 0);

  auto emit = [&](const std::vector<int>& mult) {
    Multigraph g(num_vertices);
    for (int i = 0; i < num_vertices; ++i)
      for (int j = i; j < num_vertices; ++j)
        for (int k = 0; k < mult[static_cast<std::size_t>(i * num_vertices + j)]; ++k) g.add_edge(i, j);
    for (int j = 0; j < num_legs; ++j) g.add_leg(leg_vertex[static_cast<std::size_t>(j)], j + 1);
    if (!g.is_connected()) return;
    auto key = canonical_encoding(g);
    if (!classes.contains(key)) classes.emplace(key, decode_canonical(key));
  };

  std::function<void(int)> place_leg = [&](int j) {
    if (j == num_legs) {
      std::vector<int> targets(static_cast<std::size_t>(num_vertices));
      for (int v = 0; v < num_vertices; ++v)
        targets[static_cast<std::size_t>(v)] = degree_sequence[static_cast<std::size_t>(v)] - legs_at[static_cast<std::size_t>(v)];
      for_each_edge_multiset(targets, options, emit);
      return;
    }
    for (int v = 0; v < num_vertices; ++v) {
      if (legs_at[static_cast<std::size_t>(v)] == degree_sequence[static_cast<std::size_t>(v)]) continue;
      ++legs_at[static_cast<std::size_t>(v)];
      leg_vertex[static_cast<std::size_t>(j)] = v;
      place_leg(j + 1);
      --legs_at[static_cast<std::size_t>(v)];
    }
  };
  place_leg(0);

  std::vector<Multigraph> result;
  result.reserve(classes.size());
  for (auto& [key, g] : classes) result.push_back(std::move(g));
  return result;
}

}  // namespace tropica::graphs
