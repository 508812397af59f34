#include "tropica/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "tropica/errors.hpp"

namespace tropica::graphs {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

Multigraph::Multigraph(int num_vertices) {
  if (num_vertices < 0) throw ArgumentError("negative vertex count");
  genus_.assign(static_cast<std::size_t>(num_vertices), 0);
}

int Multigraph::add_vertex(int genus) {
  if (genus < 0) throw ArgumentError("negative vertex genus");
  genus_.push_back(genus);
  return num_vertices() - 1;
}

int Multigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    throw ArgumentError("edge endpoint out of range");
  edges_.emplace_back(u, v);
  return num_edges() - 1;
}

int Multigraph::add_leg(int v, int label) {
  if (v < 0 || v >= num_vertices()) throw ArgumentError("leg vertex out of range");
  if (label < 0) throw ArgumentError("negative leg label");
  legs_.push_back({v, label});
  return num_legs() - 1;
}

void Multigraph::set_genus(int v, int genus) {
  if (v < 0 || v >= num_vertices()) throw ArgumentError("vertex out of range");
  if (genus < 0) throw ArgumentError("negative vertex genus");
  genus_[static_cast<std::size_t>(v)] = genus;
}

int Multigraph::vertex_of(int h) const {
  if (h < 0 || h >= num_half_edges()) throw ArgumentError("half-edge out of range");
  if (is_leg(h)) return leg(h - 2 * num_edges()).vertex;
  const auto& [a, b] = edge(h / 2);
  return (h % 2 == 0) ? a : b;
}

int Multigraph::partner(int h) const {
  if (h < 0 || h >= num_half_edges()) throw ArgumentError("half-edge out of range");
  if (is_leg(h)) return h;
  return h ^ 1;
}

int Multigraph::leg_label_of(int h) const {
  if (!is_leg(h)) throw ArgumentError("half-edge is not a leg");
  return leg(h - 2 * num_edges()).label;
}

std::vector<int> Multigraph::half_edges_at(int v) const {
  std::vector<int> result;
  for (int h = 0; h < num_half_edges(); ++h)
    if (vertex_of(h) == v) result.push_back(h);
  return result;
}

bool Multigraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.first == e.second; });
}

bool Multigraph::has_parallel_edges() const {
  std::vector<std::pair<int, int>> keys;
  for (auto [a, b] : edges_) keys.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

int Multigraph::multiplicity(int u, int v) const {
  int count = 0;
  for (auto [a, b] : edges_)
    if ((a == u && b == v) || (a == v && b == u)) ++count;
  return count;
}

int Multigraph::valence(int v) const {
  int val = 0;
  for (auto [a, b] : edges_) val += (a == v) + (b == v);
  for (const auto& l : legs_) val += (l.vertex == v);
  return val;
}

int Multigraph::num_components() const {
  std::vector<int> parent(static_cast<std::size_t>(num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  int components = num_vertices();
  for (auto [a, b] : edges_) {
    int ra = find_root(parent, a), rb = find_root(parent, b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --components;
    }
  }
  return components;
}

int Multigraph::first_betti() const { return num_edges() - num_vertices() + num_components(); }

int Multigraph::genus_sum() const { return std::accumulate(genus_.begin(), genus_.end(), 0); }

int Multigraph::total_genus() const { return first_betti() + genus_sum(); }

void Multigraph::validate() const {
  for (auto [a, b] : edges_)
    if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices())
      throw ArgumentError("edge endpoint out of range");
  for (const auto& l : legs_) {
    if (l.vertex < 0 || l.vertex >= num_vertices()) throw ArgumentError("leg vertex out of range");
    if (l.label < 0) throw ArgumentError("negative leg label");
  }
  for (int v = 0; v < num_vertices(); ++v) {
    if (genus(v) < 0) throw ArgumentError("negative vertex genus");
    if (num_vertices() > 1 && valence(v) == 0) throw ArgumentError("isolated vertex");
  }
}

Multigraph Multigraph::permute_vertices(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != num_vertices()) throw ArgumentError("permutation size mismatch");
  Multigraph out(num_vertices());
  for (int v = 0; v < num_vertices(); ++v) out.genus_[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = genus(v);
  for (auto [a, b] : edges_) out.edges_.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  for (const auto& l : legs_) out.legs_.push_back({perm[static_cast<std::size_t>(l.vertex)], l.label});
  return out;
}

std::string to_text(const Multigraph& g) {
  std::ostringstream out;
  out << "V " << g.num_vertices() << " E " << g.num_edges() << " L " << g.num_legs() << '\n';
  for (auto [a, b] : g.edges()) out << "e " << a << ' ' << b << '\n';
  for (const auto& l : g.legs()) out << "l " << l.vertex << ' ' << l.label << '\n';
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.genus(v) > 0) out << "g " << v << ' ' << g.genus(v) << '\n';
  return out.str();
}

Multigraph from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  int n = -1, m = -1, k = -1;
  std::string t1, t2;
  if (!(in >> tag >> n >> t1 >> m >> t2 >> k) || tag != "V" || t1 != "E" || t2 != "L" || n < 0 || m < 0 || k < 0)
    throw ArgumentError("malformed graph header; expected 'V <n> E <m> L <k>'");
  Multigraph g(n);
  int edges = 0, legs = 0;
  while (in >> tag) {
    int a = 0, b = 0;
    if (!(in >> a >> b)) throw ArgumentError("truncated graph line");
    if (tag == "e") {
      g.add_edge(a, b);
      ++edges;
    } else if (tag == "l") {
      g.add_leg(a, b);
      ++legs;
    } else if (tag == "g") {
      g.set_genus(a, b);
    } else {
      throw ArgumentError("unknown graph line tag: " + tag);
    }
  }
  if (edges != m || legs != k) throw ArgumentError("graph header counts do not match body");
  return g;
}

Multigraph contract_edge(const Multigraph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw ArgumentError("edge id out of range");
  auto [a, b] = g.edge(e);
  if (a == b) throw LoopContractionError("cannot contract a loop");
  const int keep = std::min(a, b), drop = std::max(a, b);
  auto remap = [&](int v) {
    if (v == drop) v = keep;
    return v > drop ? v - 1 : v;
  };
  Multigraph out(g.num_vertices() - 1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == drop) continue;
    int genus = g.genus(v) + (v == keep ? g.genus(drop) : 0);
    out.set_genus(remap(v), genus);
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    if (i == e) continue;
    out.add_edge(remap(g.edge(i).first), remap(g.edge(i).second));
  }
  for (const auto& l : g.legs()) out.add_leg(remap(l.vertex), l.label);
  return out;
}

Multigraph contract_flag(const Multigraph& g, int h) {
  if (h < 0 || h >= g.num_half_edges()) throw ArgumentError("half-edge out of range");
  if (g.is_leg(h)) throw ArgumentError("cannot contract a leg");
  return contract_edge(g, h / 2);
}

}  // namespace tropica::graphs
