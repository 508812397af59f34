#include "tropica/graph_complex.hpp"

#include <algorithm>
#include <functional>

#include "tropica/canonical.hpp"
#include "tropica/enumerate.hpp"
#include "tropica/errors.hpp"
#include "tropica/parallel.hpp"

namespace tropica::gc {

namespace {

int parity(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int transpositions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 ? -1 : 1;
}

void check_range(int genus) {
  if (genus < 2 || genus > 4) throw UnsupportedError("graph complex is supported for genus 2..4");
}

// Partitions of `total` into exactly `parts` parts, each >= 3.
void valence_sequences(int total, int parts, int max_part, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int p = std::min(max_part, total - 3 * (parts - 1)); p >= 3; --p) {
    cur.push_back(p);
    valence_sequences(total - p, parts - 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Normalized normalize(const graphs::Multigraph& g) {
  if (g.num_legs() > 0) throw ArgumentError("graph complex generators have no legs");
  if (g.has_loop()) throw ArgumentError("graph complex generators have no loops");
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.valence(v) < 3) throw ArgumentError("graph complex generators have valence >= 3");
    if (g.genus(v) != 0) throw ArgumentError("graph complex generators have no vertex genus");
  }
  Normalized out;
  const auto form = graphs::canonical_form(g);
  out.graph = form.graph;
  // Swapping two parallel edges is an odd automorphism.
  if (g.has_parallel_edges()) return out;

  const auto& canon_edges = form.graph.edges();
  int sign = 0;
  for (const auto& map : graphs::canonical_vertex_maps(g)) {
    std::vector<int> perm;
    for (const auto& [u, v] : g.edges()) {
      std::pair<int, int> image{map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]};
      if (image.first > image.second) std::swap(image.first, image.second);
      const auto it = std::lower_bound(canon_edges.begin(), canon_edges.end(), image);
      perm.push_back(static_cast<int>(it - canon_edges.begin()));
    }
    const int s = parity(perm);
    if (sign == 0) {
      sign = s;
    } else if (sign != s) {
      return out;
    }
  }
  out.sign = sign;
  out.key = form.encoding;
  return out;
}

void GraphChain::add(const std::string& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

GraphChain chain_of(const graphs::Multigraph& g, const Rational& coefficient) {
  GraphChain c;
  c.genus = g.first_betti();
  c.edges = g.num_edges();
  const auto n = normalize(g);
  if (n.sign != 0) c.add(n.key, coefficient * n.sign);
  return c;
}

GraphChain differential(const GraphChain& c) {
  GraphChain out;
  out.genus = c.genus;
  out.edges = c.edges - 1;
  for (const auto& [key, coeff] : c.terms) {
    const graphs::Multigraph g = graphs::decode_canonical(key);
    if (g.num_edges() != c.edges) throw ArgumentError("chain mixes edge counts");
    for (int i = 0; i < g.num_edges(); ++i) {
      if (g.is_loop(i)) continue;
      const graphs::Multigraph h = graphs::contract_edge(g, i);
      if (h.has_loop()) continue;
      const auto n = normalize(h);
      if (n.sign == 0) continue;
      const int position_sign = i % 2 ? -1 : 1;
      out.add(n.key, coeff * (position_sign * n.sign));
    }
  }
  return out;
}

std::vector<graphs::Multigraph> generators(int genus, int edges) {
  std::vector<graphs::Multigraph> out;
  const int vertices = edges - genus + 1;
  if (vertices < 1 || 2 * edges < 3 * vertices) return out;
  std::vector<std::vector<int>> sequences;
  std::vector<int> cur;
  valence_sequences(2 * edges, vertices, 2 * edges, cur, sequences);
  std::map<std::string, graphs::Multigraph> found;
  for (const auto& seq : sequences)
    for (const auto& g : graphs::enumerate_graphs(vertices, seq, 0, {.allow_loops = false, .allow_parallel = true})) {
      const auto n = normalize(g);
      if (n.sign != 0) found.emplace(n.key, n.graph);
    }
  for (auto& [k, g] : found) out.push_back(std::move(g));
  return out;
}

RationalMatrix differential_matrix(int genus, int edges) {
  const auto source = generators(genus, edges);
  const auto target = generators(genus, edges - 1);
  std::map<std::string, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of[graphs::canonical_encoding(target[r])] = r;
  RationalMatrix m(target.size(), source.size());
  std::vector<GraphChain> images(source.size());
  parallel_for(source.size(), [&](std::size_t col) { images[col] = differential(chain_of(source[col])); });
  for (std::size_t col = 0; col < source.size(); ++col)
    for (const auto& [key, c] : images[col].terms) m(row_of.at(key), col) = c;
  return m;
}

std::size_t homology_dimension(int genus, int edges) {
  check_range(genus);
  const std::size_t dim = generators(genus, edges).size();
  if (dim == 0) return 0;
  const std::size_t rank_out = rank(differential_matrix(genus, edges));
  const std::size_t rank_in = rank(differential_matrix(genus, edges + 1));
  return dim - rank_out - rank_in;
}

bool is_boundary(const GraphChain& c) {
  if (c.is_zero()) return true;
  const auto basis = generators(c.genus, c.edges);
  const RationalMatrix m = differential_matrix(c.genus, c.edges + 1);
  RationalMatrix augmented(m.rows(), m.cols() + 1);
  std::map<std::string, std::size_t> row_of;
  for (std::size_t r = 0; r < basis.size(); ++r) row_of[graphs::canonical_encoding(basis[r])] = r;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t col = 0; col < m.cols(); ++col) augmented(r, col) = m(r, col);
  for (const auto& [key, coeff] : c.terms) augmented(row_of.at(key), m.cols()) = coeff;
  return rank(augmented) == rank(m);
}

graphs::Multigraph wheel_graph(int genus) {
  if (genus < 2) throw ArgumentError("wheel graphs need genus >= 2");
  graphs::Multigraph g(genus + 1);
  for (int i = 1; i <= genus; ++i) g.add_edge(0, i);
  for (int i = 1; i <= genus; ++i) g.add_edge(i, i % genus + 1);
  return g;
}

GraphChain wheel_class(int genus) {
  if (genus == 2) {
    // The hub of W_2 is 2-valent, so W_2 is not a generator.
    GraphChain zero;
    zero.genus = 2;
    zero.edges = 4;
    return zero;
  }
  return chain_of(wheel_graph(genus));
}

}  // namespace tropica::gc
