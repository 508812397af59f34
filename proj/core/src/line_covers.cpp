#include "tropica/line_covers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tropica/canonical.hpp"
#include "tropica/cover_checks.hpp"
#include "tropica/errors.hpp"
#include "tropica/parallel.hpp"

namespace tropica::line {

namespace {

// An open strand: weight w, leaving the vertex at `origin` to the right
// (origin 0 means it is still the unattached left end).
struct Strand {
  int origin = 0;
  int weight = 0;
  friend auto operator<=>(const Strand&, const Strand&) = default;
};

struct Partial {
  std::vector<LineCover::Edge> edges;
  std::vector<LineCover::End> left;
  std::vector<Strand> open;
  friend auto operator<=>(const Partial&, const Partial&) = default;

  void normalize() {
    std::sort(edges.begin(), edges.end());
    std::sort(left.begin(), left.end());
    std::sort(open.begin(), open.end());
  }

  // Attaches strand `s` to the vertex at `level`.
  void consume(const Strand& s, int level) {
    if (s.origin == 0)
      left.push_back({level, s.weight});
    else
      edges.push_back({s.origin, level, s.weight});
  }
};

bool connected(int levels, const std::vector<LineCover::Edge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(levels + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int components = levels;
  for (const auto& e : edges) {
    const int a = find(e.lo), b = find(e.hi);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

// Number of unordered pairs of equal records in a sorted range, counting each group of size m as m - 1
// (groups never exceed two entries at a trivalent vertex, where this is the number of balanced pairs).
template <class T>
int equal_groups(const std::vector<T>& sorted) {
  int groups = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) ++groups;
  return groups;
}

BigInt factorial_product(const auto& sorted) {
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

int num_branch_points(int genus, const Partition& mu, const Partition& nu) {
  return 2 * genus - 2 + mu.length() + nu.length();
}

graphs::Multigraph LineCover::source() const {
  graphs::Multigraph g(num_levels);
  for (const auto& e : edges) g.add_edge(e.lo - 1, e.hi - 1);
  for (const auto& end : left_ends) g.add_leg(end.level - 1);
  for (const auto& end : right_ends) g.add_leg(end.level - 1);
  return g;
}

std::vector<std::int64_t> LineCover::vertex_colors() const {
  std::vector<std::int64_t> colors(static_cast<std::size_t>(num_levels));
  std::iota(colors.begin(), colors.end(), 1);
  return colors;
}

std::vector<std::int64_t> LineCover::half_edge_colors() const {
  // Even colors point towards lower levels, odd colors towards higher ones.
  std::vector<std::int64_t> colors;
  for (const auto& e : edges) {
    colors.push_back(2 * e.weight + 1);
    colors.push_back(2 * e.weight);
  }
  for (const auto& end : left_ends) colors.push_back(2 * end.weight);
  for (const auto& end : right_ends) colors.push_back(2 * end.weight + 1);
  return colors;
}

std::string LineCover::key() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ' ';
    first = false;
  };
  for (const auto& end : left_ends) {
    sep();
    out << 'L' << end.level << ':' << end.weight;
  }
  for (const auto& e : edges) {
    sep();
    out << 'E' << e.lo << '-' << e.hi << ':' << e.weight;
  }
  for (const auto& end : right_ends) {
    sep();
    out << 'R' << end.level << ':' << end.weight;
  }
  return out.str();
}

std::vector<LineCover> enumerate_line_covers(int genus, const Partition& mu, const Partition& nu) {
  if (genus < 0) throw ArgumentError("genus must be nonnegative");
  if (mu.size() != nu.size()) throw ArgumentError("|mu| and |nu| differ");
  const int s = num_branch_points(genus, mu, nu);
  if (s <= 0) throw UnsupportedError("degenerate data: the cover has no branch points (s <= 0)");
  const int target_strands = nu.length();

  std::set<Partial> layer;
  {
    Partial start;
    for (int w : mu.parts()) start.open.push_back({0, w});
    start.normalize();
    layer.insert(start);
  }

  for (int level = 1; level <= s; ++level) {
    std::set<Partial> next;
    const int remaining = s - level;
    auto keep = [&](Partial p) {
      const int n = static_cast<int>(p.open.size());
      if (std::abs(n - target_strands) > remaining) return;
      p.normalize();
      next.insert(std::move(p));
    };
    for (const Partial& p : layer) {
      const auto& open = p.open;
      for (std::size_t i = 0; i < open.size(); ++i) {
        if (i > 0 && open[i] == open[i - 1]) continue;
        // Split strand i into {a, w - a}.
        for (int a = 1; 2 * a <= open[i].weight; ++a) {
          Partial q = p;
          q.open.erase(q.open.begin() + static_cast<std::ptrdiff_t>(i));
          q.consume(open[i], level);
          q.open.push_back({level, a});
          q.open.push_back({level, open[i].weight - a});
          keep(std::move(q));
        }
        // Merge strand i with a later strand j.
        for (std::size_t j = i + 1; j < open.size(); ++j) {
          if (j > i + 1 && open[j] == open[j - 1]) continue;
          Partial q = p;
          q.open.erase(q.open.begin() + static_cast<std::ptrdiff_t>(j));
          q.open.erase(q.open.begin() + static_cast<std::ptrdiff_t>(i));
          q.consume(open[i], level);
          q.consume(open[j], level);
          q.open.push_back({level, open[i].weight + open[j].weight});
          keep(std::move(q));
        }
      }
    }
    layer = std::move(next);
  }

  std::vector<int> target = nu.parts();
  std::sort(target.begin(), target.end());
  std::map<std::string, LineCover> found;
  for (const Partial& p : layer) {
    std::vector<int> weights;
    bool untouched = false;
    for (const auto& strand : p.open) {
      weights.push_back(strand.weight);
      if (strand.origin == 0) untouched = true;
    }
    if (untouched) continue;
    std::sort(weights.begin(), weights.end());
    if (weights != target) continue;
    if (!connected(s, p.edges)) continue;
    LineCover c;
    c.genus = genus;
    c.mu = mu;
    c.nu = nu;
    c.num_levels = s;
    c.edges = p.edges;
    c.left_ends = p.left;
    for (const auto& strand : p.open) c.right_ends.push_back({strand.origin, strand.weight});
    std::sort(c.right_ends.begin(), c.right_ends.end());
    auto k = c.key();
    found.emplace(std::move(k), std::move(c));
  }
  std::vector<LineCover> out;
  out.reserve(found.size());
  for (auto& [k, c] : found) out.push_back(std::move(c));
  return out;
}

CoverMultiplicity multiplicity(const LineCover& cover) {
  CoverMultiplicity m;
  m.weight_product = 1;
  for (const auto& e : cover.edges) m.weight_product *= e.weight;
  m.forks = equal_groups(cover.left_ends) + equal_groups(cover.right_ends);
  m.wieners = equal_groups(cover.edges);
  BigInt denominator = 1;
  denominator <<= static_cast<unsigned>(m.forks + m.wieners);
  m.value = Rational(m.weight_product, denominator);
  m.value.canonicalize();

  m.automorphisms = graphs::count_colored_automorphisms(cover.source(), cover.vertex_colors(),
                                                        cover.half_edge_colors());
  const BigInt expected = factorial_product(cover.edges) * factorial_product(cover.left_ends) *
                          factorial_product(cover.right_ends);
  if (BigInt(std::to_string(m.automorphisms)) != denominator || expected != denominator)
    throw CrossCheckError("cover " + cover.key() + ": automorphism count " + std::to_string(m.automorphisms) +
                          " differs from 2^(f+w) = " + denominator.get_str());
  return m;
}

Rational double_hurwitz_tropical(int genus, const Partition& mu, const Partition& nu) {
  const auto covers = enumerate_line_covers(genus, mu, nu);
  std::vector<Rational> values(covers.size());
  parallel_for(covers.size(), [&](std::size_t i) { values[i] = multiplicity(covers[i]).value; });
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

Rational double_hurwitz_labeled(int genus, const Partition& mu, const Partition& nu) {
  return double_hurwitz_tropical(genus, mu, nu) * Rational(mu.part_symmetry_order() * nu.part_symmetry_order());
}

bool is_valid_cover(const LineCover& cover) {
  const graphs::Multigraph g = cover.source();
  if (cover.num_levels != num_branch_points(cover.genus, cover.mu, cover.nu)) return false;
  if (!g.is_connected() || g.first_betti() != cover.genus) return false;
  const auto colors = cover.half_edge_colors();
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto halves = g.half_edges_at(v);
    if (halves.size() != 3) return false;
    std::vector<graphs::WeightedFlag> flags;
    std::vector<int> weights;
    for (int h : halves) {
      const auto c = colors[static_cast<std::size_t>(h)];
      flags.push_back({static_cast<int>(c / 2), static_cast<int>(c % 2)});
      weights.push_back(static_cast<int>(c / 2));
    }
    const auto degree = graphs::check_balancing(flags);
    if (!degree) return false;
    if (graphs::local_rh_defect(*degree, 0, 0, weights) != 1) return false;
  }
  std::vector<int> left, right;
  for (const auto& e : cover.left_ends) left.push_back(e.weight);
  for (const auto& e : cover.right_ends) right.push_back(e.weight);
  return Partition(left) == cover.mu && Partition(right) == cover.nu;
}

}  // namespace tropica::line
