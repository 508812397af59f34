#include "tropica/elliptic_covers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "tropica/canonical.hpp"
#include "tropica/cover_checks.hpp"
#include "tropica/enumerate.hpp"
#include "tropica/errors.hpp"
#include "tropica/parallel.hpp"

namespace tropica::elliptic {

namespace {

void check_genus(int genus) {
  if (genus < 2) throw ArgumentError("genus must be at least 2");
}

std::vector<int> positions_of(const feynman::VertexOrder& order, int n) {
  if (static_cast<int>(order.size()) != n) throw ArgumentError("order must list every vertex once");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) throw ArgumentError("order is not a permutation");
    pos[static_cast<std::size_t>(v)] = i;
  }
  return pos;
}

// Index of the last edge touching each vertex (-1 if none).
std::vector<int> last_edge_at(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> last(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    last[static_cast<std::size_t>(edges[static_cast<std::size_t>(k)].first)] = k;
    last[static_cast<std::size_t>(edges[static_cast<std::size_t>(k)].second)] = k;
  }
  return last;
}

// Backtracking over edge data. `options(k, budget)` lists the choices for edge k
// given the remaining degree budget; flows must vanish once a vertex is complete.
void assign_edges(int n, const std::vector<std::pair<int, int>>& edges, int degree,
                  const std::function<std::vector<EdgeData>(int, int)>& options,
                  const std::function<void(const std::vector<EdgeData>&)>& visit) {
  const auto last = last_edge_at(n, edges);
  std::vector<std::vector<int>> closing(edges.size());
  for (int v = 0; v < n; ++v)
    if (last[static_cast<std::size_t>(v)] >= 0) closing[static_cast<std::size_t>(last[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<int> flow(static_cast<std::size_t>(n), 0);
  std::vector<EdgeData> chosen(edges.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int budget) {
    if (k == edges.size()) {
      if (budget == 0) visit(chosen);
      return;
    }
    const auto [u, v] = edges[k];
    for (const EdgeData& opt : options(static_cast<int>(k), budget)) {
      const int head = opt.tail == u ? v : u;
      flow[static_cast<std::size_t>(opt.tail)] += opt.weight;
      flow[static_cast<std::size_t>(head)] -= opt.weight;
      bool ok = true;
      for (int c : closing[k])
        if (flow[static_cast<std::size_t>(c)] != 0) ok = false;
      if (ok) {
        chosen[k] = opt;
        rec(k + 1, budget - opt.weight * opt.crossings);
      }
      flow[static_cast<std::size_t>(opt.tail)] -= opt.weight;
      flow[static_cast<std::size_t>(head)] += opt.weight;
    }
  };
  rec(0, degree);
}

// Choices for an edge between positions pu, pv (vertices u, v). `fixed_a` < 0 means free.
std::vector<EdgeData> edge_options(int u, int v, int pu, int pv, int degree, int budget, int fixed_a) {
  std::vector<EdgeData> out;
  const bool loop = u == v;
  const int lower = pu < pv ? u : v, higher = pu < pv ? v : u;
  auto crossing = [&](int a) {
    for (int w = 1; w <= a; ++w) {
      if (a % w) continue;
      out.push_back({lower, w, a / w});
      if (!loop) out.push_back({higher, w, a / w});
    }
  };
  if (fixed_a == 0) {
    if (!loop)
      for (int w = 1; w <= degree; ++w) out.push_back({lower, w, 0});
  } else if (fixed_a > 0) {
    if (fixed_a <= budget) crossing(fixed_a);
  } else {
    if (!loop)
      for (int w = 1; w <= degree; ++w) out.push_back({lower, w, 0});
    for (int a = 1; a <= budget; ++a) crossing(a);
  }
  return out;
}

BigInt factorials_of_runs(const std::vector<EllipticCover::Edge>& sorted) {
  BigInt out = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
      ++run;
    } else {
      for (std::size_t k = 2; k <= run; ++k) out *= static_cast<unsigned long>(k);
      run = 1;
    }
  }
  return out;
}

}  // namespace

std::vector<graphs::Multigraph> enumerate_feynman_graphs(int genus, bool allow_loops) {
  check_genus(genus);
  const int n = 2 * genus - 2;
  return graphs::enumerate_graphs(n, std::vector<int>(static_cast<std::size_t>(n), 3), 0,
                                  {.allow_loops = allow_loops, .allow_parallel = true});
}

std::vector<int> LabeledCover::multidegree() const {
  std::vector<int> a;
  for (const auto& e : edges) a.push_back(e.weight * e.crossings);
  return a;
}

BigInt LabeledCover::weight_product() const {
  BigInt p = 1;
  for (const auto& e : edges) p *= e.weight;
  return p;
}

std::vector<LabeledCover> labeled_covers(const graphs::Multigraph& graph, const feynman::VertexOrder& order,
                                         int degree, const std::vector<int>* multidegree) {
  const int n = graph.num_vertices();
  const auto pos = positions_of(order, n);
  if (degree < 1) throw ArgumentError("degree must be positive");
  if (multidegree) {
    if (static_cast<int>(multidegree->size()) != graph.num_edges()) throw ArgumentError("multidegree has wrong length");
    if (std::accumulate(multidegree->begin(), multidegree->end(), 0) != degree)
      throw ArgumentError("multidegree does not sum to the degree");
    for (int a : *multidegree)
      if (a < 0) throw ArgumentError("negative multidegree entry");
  }
  std::vector<LabeledCover> out;
  assign_edges(
      n, graph.edges(), degree,
      [&](int k, int budget) {
        const auto [u, v] = graph.edge(k);
        const int fixed = multidegree ? (*multidegree)[static_cast<std::size_t>(k)] : -1;
        return edge_options(u, v, pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)], degree, budget, fixed);
      },
      [&](const std::vector<EdgeData>& data) { out.push_back({data}); });
  return out;
}

Rational count_labeled_covers(const graphs::Multigraph& graph, const feynman::VertexOrder& order,
                              const std::vector<int>& multidegree) {
  const int d = std::accumulate(multidegree.begin(), multidegree.end(), 0);
  if (d < 1) return 0;
  Rational total = 0;
  for (const auto& c : labeled_covers(graph, order, d, &multidegree)) total += Rational(c.weight_product());
  return total;
}

Rational simple_hurwitz_tropical(int degree, int genus) {
  check_genus(genus);
  if (degree < 1) throw ArgumentError("degree must be positive");
  const auto graphs_list = enumerate_feynman_graphs(genus);
  std::vector<std::pair<std::size_t, feynman::VertexOrder>> jobs;
  for (std::size_t i = 0; i < graphs_list.size(); ++i)
    for (auto& order : feynman::all_orders(graphs_list[i].num_vertices())) jobs.emplace_back(i, std::move(order));
  std::vector<Rational> partial(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t j) {
    for (const auto& c : labeled_covers(graphs_list[jobs[j].first], jobs[j].second, degree))
      partial[j] += Rational(c.weight_product());
  });
  std::vector<Rational> per_graph(graphs_list.size());
  for (std::size_t j = 0; j < jobs.size(); ++j) per_graph[jobs[j].first] += partial[j];
  Rational total = 0;
  for (std::size_t i = 0; i < graphs_list.size(); ++i)
    total += per_graph[i] / Rational(BigInt(std::to_string(graphs::automorphism_group_order(graphs_list[i]))));
  total.canonicalize();
  return total;
}

graphs::Multigraph EllipticCover::source() const {
  graphs::Multigraph g(2 * genus - 2);
  for (const auto& e : edges) g.add_edge(e.tail, e.head);
  return g;
}

std::vector<std::int64_t> EllipticCover::half_edge_colors() const {
  std::vector<std::int64_t> colors;
  for (const auto& e : edges) {
    const std::int64_t base = (std::int64_t{e.weight} * 1024 + e.crossings) * 2;
    colors.push_back(base);
    colors.push_back(base + 1);
  }
  return colors;
}

EllipticCover EllipticCover::reflected() const {
  EllipticCover r = *this;
  const int n = 2 * genus - 2;
  auto moved = [n](int i) { return i == 0 ? 0 : n - i; };
  for (auto& e : r.edges) {
    // full turns, plus one if the clockwise arc tail -> head contains the new base point
    const int turns = e.crossings - (e.tail >= e.head ? 1 : 0);
    const bool through = e.tail < e.head ? e.tail == 0 : e.head >= 1;
    e = {moved(e.head), moved(e.tail), e.weight, turns + (through ? 1 : 0)};
  }
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

std::string EllipticCover::key() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    out << (i ? " " : "") << 'p' << e.tail + 1 << ">p" << e.head + 1 << ":w" << e.weight << "t" << e.crossings;
  }
  return out.str();
}

std::vector<EllipticCover> enumerate_elliptic_covers(int degree, int genus) {
  check_genus(genus);
  if (degree < 1) throw ArgumentError("degree must be positive");
  const int n = 2 * genus - 2;
  std::set<std::vector<EllipticCover::Edge>> found;
  graphs::for_each_edge_multiset(
      std::vector<int>(static_cast<std::size_t>(n), 3), {.allow_loops = true, .allow_parallel = true},
      [&](const std::vector<int>& mult) {
        graphs::Multigraph g(n);
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j)
            for (int k = 0; k < mult[static_cast<std::size_t>(i * n + j)]; ++k) g.add_edge(i, j);
        if (!g.is_connected()) return;
        assign_edges(
            n, g.edges(), degree,
            [&](int k, int budget) {
              const auto [u, v] = g.edge(k);
              return edge_options(u, v, u, v, degree, budget, -1);
            },
            [&](const std::vector<EdgeData>& data) {
              std::vector<EllipticCover::Edge> records;
              for (std::size_t k = 0; k < data.size(); ++k) {
                const auto [u, v] = g.edge(static_cast<int>(k));
                const int head = data[k].tail == u ? v : u;
                records.push_back({data[k].tail, head, data[k].weight, data[k].crossings});
              }
              std::sort(records.begin(), records.end());
              found.insert(std::move(records));
            });
      });
  std::vector<EllipticCover> out;
  for (const auto& records : found) out.push_back({degree, genus, records});
  return out;
}

EllipticMultiplicity multiplicity(const EllipticCover& cover) {
  EllipticMultiplicity m;
  m.weight_product = 1;
  for (const auto& e : cover.edges) m.weight_product *= e.weight;
  const auto g = cover.source();
  std::vector<std::int64_t> vertex_colors(static_cast<std::size_t>(g.num_vertices()));
  std::iota(vertex_colors.begin(), vertex_colors.end(), 0);
  m.automorphisms = graphs::count_colored_automorphisms(g, vertex_colors, cover.half_edge_colors());
  const BigInt expected = factorials_of_runs(cover.edges);
  if (BigInt(std::to_string(m.automorphisms)) != expected)
    throw CrossCheckError("cover " + cover.key() + ": automorphism count " + std::to_string(m.automorphisms) +
                          " differs from " + expected.get_str());
  m.value = Rational(m.weight_product, expected);
  m.value.canonicalize();
  return m;
}

Rational simple_hurwitz_direct(int degree, int genus) {
  Rational total = 0;
  for (const auto& c : enumerate_elliptic_covers(degree, genus)) total += multiplicity(c).value;
  return total;
}

std::uint64_t loop_graph_assignments(int degree, int genus) {
  std::uint64_t count = 0;
  for (const auto& g : enumerate_feynman_graphs(genus, true)) {
    if (!g.has_loop()) continue;
    for (const auto& order : feynman::all_orders(g.num_vertices()))
      count += labeled_covers(g, order, degree).size();
  }
  return count;
}

bool is_valid_cover(const EllipticCover& cover) {
  const auto g = cover.source();
  if (!g.is_connected() || g.first_betti() != cover.genus) return false;
  int degree = 0;
  for (const auto& e : cover.edges) {
    if (e.weight < 1 || e.crossings < 0) return false;
    if (e.tail >= e.head && e.crossings == 0) return false;
    degree += e.weight * e.crossings;
  }
  if (degree != cover.degree) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<graphs::WeightedFlag> flags;
    std::vector<int> weights;
    for (const auto& e : cover.edges) {
      if (e.tail == v) {
        flags.push_back({e.weight, 0});
        weights.push_back(e.weight);
      }
      if (e.head == v) {
        flags.push_back({e.weight, 1});
        weights.push_back(e.weight);
      }
    }
    if (flags.size() != 3) return false;
    const auto dv = graphs::check_balancing(flags);
    if (!dv || *dv > cover.degree) return false;
    if (graphs::local_rh_defect(*dv, 0, 0, weights) != 1) return false;
  }
  return true;
}

}  // namespace tropica::elliptic
