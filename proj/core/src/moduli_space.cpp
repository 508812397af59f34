#include "tropica/moduli_space.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tropica/canonical.hpp"
#include "tropica/enumerate.hpp"
#include "tropica/errors.hpp"

namespace tropica::moduli {

namespace {

// Nonincreasing genus vectors of length `count` with entries summing to at most `budget`.
void genus_vectors(int count, int budget, int max_entry, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == count) {
    visit(cur);
    return;
  }
  for (int x = std::min(budget, max_entry); x >= 0; --x) {
    cur.push_back(x);
    genus_vectors(count, budget - x, x, cur, visit);
    cur.pop_back();
  }
}

// Places legs 1..n on vertices. Among vertices of equal genus, a vertex carrying
// legs precedes the later ones by its smallest leg label.
void leg_placements(int n, const std::vector<int>& genera, std::vector<int>& where,
                    const std::function<void(const std::vector<int>&)>& visit) {
  const int vertices = static_cast<int>(genera.size());
  std::vector<int> used(static_cast<std::size_t>(vertices), 0);
  std::function<void(int)> rec = [&](int leg) {
    if (leg == n) {
      visit(where);
      return;
    }
    for (int v = 0; v < vertices; ++v) {
      // A fresh vertex may only be opened if every earlier vertex of the same genus is already used.
      if (!used[static_cast<std::size_t>(v)]) {
        bool blocked = false;
        for (int u = 0; u < v; ++u)
          if (genera[static_cast<std::size_t>(u)] == genera[static_cast<std::size_t>(v)] && !used[static_cast<std::size_t>(u)])
            blocked = true;
        if (blocked) continue;
      }
      where[static_cast<std::size_t>(leg)] = v;
      ++used[static_cast<std::size_t>(v)];
      rec(leg + 1);
      --used[static_cast<std::size_t>(v)];
    }
  };
  rec(0);
}

// Compositions of `total` into parts t_v >= lower[v].
void compositions(int total, const std::vector<int>& lower, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t k = cur.size();
  if (k == lower.size()) {
    if (total == 0) visit(cur);
    return;
  }
  int rest_lower = 0;
  for (std::size_t i = k + 1; i < lower.size(); ++i) rest_lower += lower[i];
  for (int t = lower[k]; t + rest_lower <= total; ++t) {
    cur.push_back(t);
    compositions(total - t, lower, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

bool is_stable(const graphs::Multigraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (2 * g.genus(v) - 2 + g.valence(v) <= 0) return false;
  return true;
}

std::vector<CombinatorialType> enumerate_types(int genus, int marks, bool force) {
  if (genus < 0 || marks < 0) throw ArgumentError("genus and marks must be nonnegative");
  if (2 * genus - 2 + marks <= 0) throw ArgumentError("(g, n) is not stable: need 2g - 2 + n > 0");
  const int max_vertices = 2 * genus - 2 + marks;
  if (max_vertices > kMaxModuliVertices && !force)
    throw SizeGuardError("moduli enumeration limited to 2g - 2 + n <= " + std::to_string(kMaxModuliVertices));

  std::map<std::string, graphs::Multigraph> found;
  for (int vertices = 1; vertices <= max_vertices; ++vertices) {
    std::vector<int> gcur;
    genus_vectors(vertices, genus, genus, gcur, [&](const std::vector<int>& genera) {
      int genus_sum = 0;
      for (int x : genera) genus_sum += x;
      const int betti = genus - genus_sum;
      const int edges = vertices - 1 + betti;
      std::vector<int> where(static_cast<std::size_t>(marks));
      leg_placements(marks, genera, where, [&](const std::vector<int>& placement) {
        std::vector<int> legs_at(static_cast<std::size_t>(vertices), 0);
        for (int v : placement) ++legs_at[static_cast<std::size_t>(v)];
        std::vector<int> lower(static_cast<std::size_t>(vertices));
        for (int v = 0; v < vertices; ++v) {
          const int need = 3 - 2 * genera[static_cast<std::size_t>(v)] - legs_at[static_cast<std::size_t>(v)];
          lower[static_cast<std::size_t>(v)] = std::max(need, vertices > 1 ? 1 : 0);
        }
        std::vector<int> tcur;
        compositions(2 * edges, lower, tcur, [&](const std::vector<int>& targets) {
          graphs::for_each_edge_multiset(targets, {}, [&](const std::vector<int>& mult) {
            graphs::Multigraph g(vertices);
            for (int v = 0; v < vertices; ++v) g.set_genus(v, genera[static_cast<std::size_t>(v)]);
            for (int i = 0; i < vertices; ++i)
              for (int j = i; j < vertices; ++j)
                for (int k = 0; k < mult[static_cast<std::size_t>(i * vertices + j)]; ++k) g.add_edge(i, j);
            for (int leg = 0; leg < marks; ++leg) g.add_leg(placement[static_cast<std::size_t>(leg)], leg + 1);
            if (!g.is_connected() || !is_stable(g)) return;
            const auto form = graphs::canonical_form(g);
            found.try_emplace(form.encoding, form.graph);
          });
        });
      });
    });
  }
  std::vector<CombinatorialType> out;
  for (auto& [key, g] : found) out.push_back({g, key, g.num_edges()});
  std::stable_sort(out.begin(), out.end(),
                   [](const CombinatorialType& a, const CombinatorialType& b) { return a.dimension > b.dimension; });
  return out;
}

graphs::Multigraph contract_any_edge(const graphs::Multigraph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw ArgumentError("edge id out of range");
  if (!g.is_loop(e)) return graphs::contract_edge(g, e);
  graphs::Multigraph h(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) h.set_genus(v, g.genus(v));
  const int v = g.edge(e).first;
  h.set_genus(v, g.genus(v) + 1);
  for (int k = 0; k < g.num_edges(); ++k)
    if (k != e) h.add_edge(g.edge(k).first, g.edge(k).second);
  for (const auto& leg : g.legs()) h.add_leg(leg.vertex, leg.label);
  return h;
}

bool is_folded(const graphs::Multigraph& g) {
  std::vector<std::int64_t> vertex_colors(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<std::int64_t> edge_colors(static_cast<std::size_t>(g.num_half_edges()));
  for (int h = 0; h < g.num_half_edges(); ++h) edge_colors[static_cast<std::size_t>(h)] = g.is_leg(h) ? -1 : h / 2;
  return graphs::automorphism_group_order(g) > graphs::count_colored_automorphisms(g, vertex_colors, edge_colors);
}

ConePoset build_poset(const std::vector<CombinatorialType>& types) {
  ConePoset poset;
  poset.types = types;
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(types.size()); ++i) index[types[static_cast<std::size_t>(i)].key] = i;
  std::vector<std::pair<int, int>> covers;
  for (int b = 0; b < static_cast<int>(types.size()); ++b) {
    const auto& g = types[static_cast<std::size_t>(b)].graph;
    for (int e = 0; e < g.num_edges(); ++e) {
      const auto key = graphs::canonical_encoding(contract_any_edge(g, e));
      const auto it = index.find(key);
      if (it == index.end()) throw CrossCheckError("contraction left the list of types");
      covers.emplace_back(it->second, b);
    }
    poset.folded.push_back(is_folded(g));
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  poset.covers = std::move(covers);
  return poset;
}

int max_dimension(int genus, int marks) {
  int best = 0;
  for (const auto& t : enumerate_types(genus, marks)) best = std::max(best, t.dimension);
  return best;
}

}  // namespace tropica::moduli
