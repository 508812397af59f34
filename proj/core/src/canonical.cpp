#include "tropica/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "tropica/errors.hpp"

namespace tropica::graphs {

namespace {

using Matrix = std::vector<std::vector<int>>;

struct VertexData {
  int genus = 0;
  std::vector<int> leg_labels;  // sorted
};

Matrix multiplicity_matrix(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  Matrix m(n, std::vector<int>(n, 0));
  for (auto [a, b] : g.edges()) {
    if (a == b) {
      ++m[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)];
    } else {
      ++m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      ++m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
    }
  }
  return m;
}

std::vector<VertexData> vertex_data(const Multigraph& g) {
  std::vector<VertexData> data(static_cast<std::size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) data[static_cast<std::size_t>(v)].genus = g.genus(v);
  for (const auto& l : g.legs()) data[static_cast<std::size_t>(l.vertex)].leg_labels.push_back(l.label);
  for (auto& d : data) std::sort(d.leg_labels.begin(), d.leg_labels.end());
  return data;
}

// Iterated color refinement. Colors depend only on the isomorphism class
// of the rooted vertex, so cells can be ordered canonically by color.
std::vector<int> refined_colors(const Matrix& m, const std::vector<VertexData>& data) {
  const std::size_t n = m.size();
  std::vector<std::vector<int>> keys(n);
  for (std::size_t v = 0; v < n; ++v) {
    int degree = 0;
    for (std::size_t u = 0; u < n; ++u) degree += (u == v ? 2 : 1) * m[v][u];
    auto& k = keys[v];
    k = {data[v].genus, static_cast<int>(data[v].leg_labels.size())};
    k.insert(k.end(), data[v].leg_labels.begin(), data[v].leg_labels.end());
    k.push_back(m[v][v]);
    k.push_back(degree);
  }
  auto rank = [&](const std::vector<std::vector<int>>& ks) {
    std::vector<std::vector<int>> sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(n);
    for (std::size_t v = 0; v < n; ++v)
      colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), ks[v]) - sorted.begin());
    return std::pair{colors, static_cast<int>(sorted.size())};
  };
  auto [colors, count] = rank(keys);
  while (true) {
    std::vector<std::vector<int>> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nbrs;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && m[v][u] > 0) nbrs.emplace_back(colors[u], m[v][u]);
      std::sort(nbrs.begin(), nbrs.end());
      next[v].push_back(colors[v]);
      for (auto [c, mult] : nbrs) {
        next[v].push_back(c);
        next[v].push_back(mult);
      }
    }
    auto [new_colors, new_count] = rank(next);
    colors = std::move(new_colors);
    if (new_count == count) break;
    count = new_count;
  }
  return colors;
}

// Row p of the encoding for the vertex placed at position p, given the
// vertices already placed at positions < p.
void append_row(std::vector<int>& row, int vertex, const std::vector<int>& placed, const Matrix& m,
                const std::vector<VertexData>& data) {
  const auto& d = data[static_cast<std::size_t>(vertex)];
  row.push_back(d.genus);
  row.push_back(static_cast<int>(d.leg_labels.size()));
  row.insert(row.end(), d.leg_labels.begin(), d.leg_labels.end());
  row.push_back(m[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(vertex)]);
  for (int q : placed) row.push_back(m[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(q)]);
}

struct SearchResult {
  std::vector<int> encoding;                // header + rows
  std::vector<std::vector<int>> orderings;  // position -> original vertex
};

SearchResult canonical_search(const Multigraph& g, bool collect_all) {
  const int n = g.num_vertices();
  const Matrix m = multiplicity_matrix(g);
  const auto data = vertex_data(g);
  const auto colors = refined_colors(m, data);

  // Positions are filled cell by cell in increasing color order.
  std::vector<int> cell_of_position;
  {
    std::vector<int> sorted_colors(colors.begin(), colors.end());
    std::sort(sorted_colors.begin(), sorted_colors.end());
    cell_of_position = sorted_colors;
  }

  SearchResult best;
  std::vector<std::vector<int>> best_rows;
  bool have_best = false;

  std::vector<int> placed;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> rows;

  // state: 0 = prefix equal to best, -1 = already smaller than best.
  // Returns true when the best encoding was replaced inside this subtree;
  // the current prefix then equals the new best's prefix.
  std::function<bool(int, int)> dfs = [&](int pos, int state) -> bool {
    if (pos == n) {
      if (!have_best || state < 0) {
        best_rows = rows;
        best.orderings.clear();
        best.orderings.push_back(placed);
        have_best = true;
        return true;
      }
      if (collect_all) best.orderings.push_back(placed);
      return false;
    }
    bool updated = false;
    const int cell = cell_of_position[static_cast<std::size_t>(pos)];
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] || colors[static_cast<std::size_t>(v)] != cell) continue;
      std::vector<int> row;
      append_row(row, v, placed, m, data);
      int next_state = state;
      if (!have_best) {
        next_state = -1;
      } else if (state == 0) {
        const auto& ref = best_rows[static_cast<std::size_t>(pos)];
        if (row > ref) continue;
        if (row < ref) next_state = -1;
        else if (!collect_all && pos == n - 1) continue;
      }
      used[static_cast<std::size_t>(v)] = 1;
      placed.push_back(v);
      rows.push_back(std::move(row));
      if (dfs(pos + 1, next_state)) {
        updated = true;
        state = 0;
      }
      rows.pop_back();
      placed.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
    return updated;
  };
  dfs(0, 0);

  best.encoding = {n, g.num_edges(), g.num_legs()};
  for (const auto& r : best_rows) best.encoding.insert(best.encoding.end(), r.begin(), r.end());
  if (n == 0) best.orderings = {{}};
  return best;
}

std::string encode(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

// Canonical representative: edges sorted by (min, max) endpoint, legs by (vertex, label).
Multigraph build_from_rows(int n, const std::vector<int>& genus, const std::vector<std::vector<int>>& legs,
                           const Matrix& m) {
  Multigraph out(n);
  for (int v = 0; v < n; ++v) out.set_genus(v, genus[static_cast<std::size_t>(v)]);
  for (int p = 0; p < n; ++p)
    for (int q = p; q < n; ++q)
      for (int k = 0; k < m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]; ++k) out.add_edge(p, q);
  for (int v = 0; v < n; ++v)
    for (int label : legs[static_cast<std::size_t>(v)]) out.add_leg(v, label);
  return out;
}

std::vector<int> inverse(const std::vector<int>& ordering) {
  std::vector<int> perm(ordering.size());
  for (std::size_t p = 0; p < ordering.size(); ++p) perm[static_cast<std::size_t>(ordering[p])] = static_cast<int>(p);
  return perm;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

CanonicalForm canonical_form(const Multigraph& g) {
  g.validate();
  auto search = canonical_search(g, false);
  CanonicalForm result;
  result.encoding = encode(search.encoding);
  result.vertex_perm = inverse(search.orderings.front());
  result.graph = decode_canonical(result.encoding);

  const auto& perm = result.vertex_perm;
  const int m = g.num_edges();
  result.half_edge_perm.assign(static_cast<std::size_t>(g.num_half_edges()), -1);

  std::vector<int> edge_order(static_cast<std::size_t>(m));
  std::iota(edge_order.begin(), edge_order.end(), 0);
  auto edge_key = [&](int e) {
    int a = perm[static_cast<std::size_t>(g.edge(e).first)], b = perm[static_cast<std::size_t>(g.edge(e).second)];
    return std::pair{std::min(a, b), std::max(a, b)};
  };
  std::stable_sort(edge_order.begin(), edge_order.end(), [&](int x, int y) { return edge_key(x) < edge_key(y); });
  for (int c = 0; c < m; ++c) {
    const int e = edge_order[static_cast<std::size_t>(c)];
    const int a = perm[static_cast<std::size_t>(g.edge(e).first)], b = perm[static_cast<std::size_t>(g.edge(e).second)];
    const bool flipped = a > b;
    result.half_edge_perm[static_cast<std::size_t>(2 * e)] = flipped ? 2 * c + 1 : 2 * c;
    result.half_edge_perm[static_cast<std::size_t>(2 * e + 1)] = flipped ? 2 * c : 2 * c + 1;
  }
  std::vector<int> leg_order(static_cast<std::size_t>(g.num_legs()));
  std::iota(leg_order.begin(), leg_order.end(), 0);
  auto leg_key = [&](int j) { return std::pair{perm[static_cast<std::size_t>(g.leg(j).vertex)], g.leg(j).label}; };
  std::stable_sort(leg_order.begin(), leg_order.end(), [&](int x, int y) { return leg_key(x) < leg_key(y); });
  for (int c = 0; c < g.num_legs(); ++c)
    result.half_edge_perm[static_cast<std::size_t>(2 * m + leg_order[static_cast<std::size_t>(c)])] = 2 * m + c;
  return result;
}

std::string canonical_encoding(const Multigraph& g) { return encode(canonical_search(g, false).encoding); }

Multigraph decode_canonical(const std::string& encoding) {
  std::vector<int> values;
  {
    std::stringstream in(encoding);
    std::string token;
    while (std::getline(in, token, ',')) values.push_back(std::stoi(token));
  }
  if (values.size() < 3) throw ArgumentError("malformed canonical encoding");
  std::size_t at = 0;
  auto next = [&]() {
    if (at >= values.size()) throw ArgumentError("truncated canonical encoding");
    return values[at++];
  };
  const int n = next();
  next();  // edges
  next();  // legs
  std::vector<int> genus(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> legs(static_cast<std::size_t>(n));
  Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int p = 0; p < n; ++p) {
    genus[static_cast<std::size_t>(p)] = next();
    const int k = next();
    for (int i = 0; i < k; ++i) legs[static_cast<std::size_t>(p)].push_back(next());
    m[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = next();
    for (int q = 0; q < p; ++q) {
      const int mult = next();
      m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = mult;
      m[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = mult;
    }
  }
  return build_from_rows(n, genus, legs, m);
}

std::vector<std::vector<int>> canonical_vertex_maps(const Multigraph& g) {
  auto search = canonical_search(g, true);
  std::vector<std::vector<int>> maps;
  maps.reserve(search.orderings.size());
  for (const auto& ordering : search.orderings) maps.push_back(inverse(ordering));
  return maps;
}

std::uint64_t automorphism_group_order(const Multigraph& g) {
  const auto vertex_auts = static_cast<std::uint64_t>(canonical_search(g, true).orderings.size());
  std::uint64_t bundle = 1;
  const Matrix m = multiplicity_matrix(g);
  const int n = g.num_vertices();
  for (int p = 0; p < n; ++p) {
    const int loops = m[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
    bundle *= factorial(loops) << loops;
    for (int q = p + 1; q < n; ++q) bundle *= factorial(m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
  }
  std::map<std::pair<int, int>, int> leg_groups;
  for (const auto& l : g.legs()) ++leg_groups[{l.vertex, l.label}];
  for (const auto& [key, count] : leg_groups) bundle *= factorial(count);
  return vertex_auts * bundle;
}

std::uint64_t count_colored_automorphisms(const Multigraph& g, const std::vector<std::int64_t>& vertex_colors,
                                          const std::vector<std::int64_t>& half_edge_colors) {
  const int n = g.num_vertices();
  const int hcount = g.num_half_edges();
  if (static_cast<int>(vertex_colors.size()) != n || static_cast<int>(half_edge_colors.size()) != hcount)
    throw ArgumentError("color vector size mismatch");

  std::vector<int> vertex_of(static_cast<std::size_t>(hcount));
  for (int h = 0; h < hcount; ++h) vertex_of[static_cast<std::size_t>(h)] = g.vertex_of(h);

  std::uint64_t total = 0;
  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  std::vector<char> vertex_used(static_cast<std::size_t>(n), 0);

  std::vector<int> psi(static_cast<std::size_t>(hcount), -1);
  std::vector<char> half_used(static_cast<std::size_t>(hcount), 0);

  auto compatible = [&](int h, int image) {
    if (vertex_of[static_cast<std::size_t>(image)] != phi[static_cast<std::size_t>(vertex_of[static_cast<std::size_t>(h)])]) return false;
    if (half_edge_colors[static_cast<std::size_t>(image)] != half_edge_colors[static_cast<std::size_t>(h)]) return false;
    if (g.is_leg(h) != g.is_leg(image)) return false;
    if (g.is_leg(h) && g.leg_label_of(h) != g.leg_label_of(image)) return false;
    return true;
  };

  std::function<void(int)> match_half_edges = [&](int h) {
    while (h < hcount && psi[static_cast<std::size_t>(h)] != -1) ++h;
    if (h == hcount) {
      ++total;
      return;
    }
    const int mate = g.partner(h);
    for (int image = 0; image < hcount; ++image) {
      if (half_used[static_cast<std::size_t>(image)] || !compatible(h, image)) continue;
      if (mate == h) {
        psi[static_cast<std::size_t>(h)] = image;
        half_used[static_cast<std::size_t>(image)] = 1;
        match_half_edges(h + 1);
        half_used[static_cast<std::size_t>(image)] = 0;
        psi[static_cast<std::size_t>(h)] = -1;
        continue;
      }
      const int image_mate = g.partner(image);
      if (image_mate == image || half_used[static_cast<std::size_t>(image_mate)]) continue;
      if (!compatible(mate, image_mate)) continue;
      psi[static_cast<std::size_t>(h)] = image;
      psi[static_cast<std::size_t>(mate)] = image_mate;
      half_used[static_cast<std::size_t>(image)] = 1;
      half_used[static_cast<std::size_t>(image_mate)] = 1;
      match_half_edges(h + 1);
      half_used[static_cast<std::size_t>(image)] = 0;
      half_used[static_cast<std::size_t>(image_mate)] = 0;
      psi[static_cast<std::size_t>(h)] = -1;
      psi[static_cast<std::size_t>(mate)] = -1;
    }
  };

  std::function<void(int)> match_vertices = [&](int v) {
    if (v == n) {
      match_half_edges(0);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (vertex_used[static_cast<std::size_t>(w)]) continue;
      if (vertex_colors[static_cast<std::size_t>(w)] != vertex_colors[static_cast<std::size_t>(v)]) continue;
      if (g.genus(w) != g.genus(v)) continue;
      phi[static_cast<std::size_t>(v)] = w;
      vertex_used[static_cast<std::size_t>(w)] = 1;
      match_vertices(v + 1);
      vertex_used[static_cast<std::size_t>(w)] = 0;
      phi[static_cast<std::size_t>(v)] = -1;
    }
  };
  match_vertices(0);
  return total;
}

}  // namespace tropica::graphs
