#include "tropica/chambers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "tropica/errors.hpp"
#include "tropica/line_covers.hpp"
#include "tropica/linalg.hpp"
#include "tropica/partition.hpp"

namespace tropica::chambers {

namespace {

void check_lengths(int lmu, int lnu) {
  if (lmu < 1 || lnu < 1) throw ArgumentError("partition lengths must be positive");
}

// Enumerates slice points with entries in [1, bound], sorted by (|mu|, mu, nu).
std::vector<Point> box_points(int lmu, int lnu, int bound) {
  const int free_count = lmu + lnu - 1;
  std::vector<long> x(static_cast<std::size_t>(free_count), 1);
  std::vector<Point> out;
  while (true) {
    Point p;
    p.mu.assign(x.begin(), x.begin() + lmu);
    p.nu.assign(x.begin() + lmu, x.end());
    const long last = std::accumulate(p.mu.begin(), p.mu.end(), 0L) - std::accumulate(p.nu.begin(), p.nu.end(), 0L);
    if (last >= 1 && last <= bound) {
      p.nu.push_back(last);
      out.push_back(std::move(p));
    }
    int k = free_count - 1;
    while (k >= 0 && x[static_cast<std::size_t>(k)] == bound) x[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++x[static_cast<std::size_t>(k)];
  }
  std::stable_sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
    const long sa = std::accumulate(a.mu.begin(), a.mu.end(), 0L);
    const long sb = std::accumulate(b.mu.begin(), b.mu.end(), 0L);
    if (sa != sb) return sa < sb;
    if (a.mu != b.mu) return a.mu < b.mu;
    return a.nu < b.nu;
  });
  return out;
}

bool generic(const std::vector<int>& signs) {
  return std::none_of(signs.begin(), signs.end(), [](int s) { return s == 0; });
}

struct Tree {
  int num_leaves = 0;
  std::vector<std::pair<int, int>> edges;  // nodes: leaves 0..n-1, internal n..
};

void grow_trees(Tree& t, int next_leaf, int total, const std::function<void(const Tree&)>& visit) {
  if (next_leaf == total) {
    visit(t);
    return;
  }
  const std::size_t count = t.edges.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto [a, b] = t.edges[i];
    const int internal = total + (next_leaf - 2);
    t.edges[i] = {a, internal};
    t.edges.emplace_back(internal, b);
    t.edges.emplace_back(next_leaf, internal);
    grow_trees(t, next_leaf + 1, total, visit);
    t.edges.pop_back();
    t.edges.pop_back();
    t.edges[i] = {a, b};
  }
}

// All trivalent trees whose leaves 0..n-1 are labeled (n >= 3).
void for_each_tree(int n, const std::function<void(const Tree&)>& visit) {
  Tree t;
  t.num_leaves = n;
  t.edges = {{0, n}, {1, n}, {2, n}};
  grow_trees(t, 3, n, visit);
}

std::uint64_t linear_extensions(int count, const std::vector<std::pair<int, int>>& arrows) {
  std::vector<std::uint32_t> preds(static_cast<std::size_t>(count), 0);
  for (auto [from, to] : arrows) preds[static_cast<std::size_t>(to)] |= 1u << from;
  std::vector<std::uint64_t> ways(std::size_t{1} << count, 0);
  ways[0] = 1;
  for (std::uint32_t mask = 0; mask < ways.size(); ++mask) {
    if (ways[mask] == 0) continue;
    for (int v = 0; v < count; ++v) {
      if (mask & (1u << v)) continue;
      if ((preds[static_cast<std::size_t>(v)] & mask) != preds[static_cast<std::size_t>(v)]) continue;
      ways[mask | (1u << v)] += ways[mask];
    }
  }
  return ways.back();
}

std::vector<Polynomial::Exponents> monomials(int num_vars, int free_vars, int max_degree) {
  std::vector<Polynomial::Exponents> out;
  Polynomial::Exponents e(static_cast<std::size_t>(num_vars), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == free_vars) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(var)] = k;
      rec(var + 1, left - k);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  rec(0, max_degree);
  return out;
}

}  // namespace

long LinearForm::evaluate(const std::vector<long>& mu_values, const std::vector<long>& nu_values) const {
  long total = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) total += mu[i] * mu_values[i];
  for (std::size_t j = 0; j < nu.size(); ++j) total += nu[j] * nu_values[j];
  return total;
}

Polynomial LinearForm::polynomial() const {
  std::vector<int> coeffs(mu);
  coeffs.insert(coeffs.end(), nu.begin(), nu.end());
  return Polynomial::linear(coeffs);
}

std::string LinearForm::to_string() const {
  return polynomial().to_string(variable_names(static_cast<int>(mu.size()), static_cast<int>(nu.size())));
}

std::vector<std::string> variable_names(int lmu, int lnu) {
  std::vector<std::string> names;
  for (int i = 1; i <= lmu; ++i) names.push_back("mu" + std::to_string(i));
  for (int j = 1; j <= lnu; ++j) names.push_back("nu" + std::to_string(j));
  return names;
}

std::vector<LinearForm> walls(int lmu, int lnu) {
  check_lengths(lmu, lnu);
  std::vector<LinearForm> out;
  const unsigned full_mu = (1u << lmu) - 1, full_nu = (1u << lnu) - 1;
  for (unsigned i_set = 1; i_set < full_mu; ++i_set) {
    if (!(i_set & 1u)) continue;
    for (unsigned j_set = 1; j_set < full_nu; ++j_set) {
      LinearForm f{std::vector<int>(static_cast<std::size_t>(lmu), 0), std::vector<int>(static_cast<std::size_t>(lnu), 0)};
      for (int i = 0; i < lmu; ++i)
        if (i_set & (1u << i)) f.mu[static_cast<std::size_t>(i)] = 1;
      for (int j = 0; j < lnu; ++j)
        if (j_set & (1u << j)) f.nu[static_cast<std::size_t>(j)] = -1;
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<int> sign_vector(int lmu, int lnu, const Point& p) {
  std::vector<int> signs;
  for (const auto& w : walls(lmu, lnu)) {
    const long v = w.evaluate(p.mu, p.nu);
    signs.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
  }
  return signs;
}

std::vector<Chamber> chamber_decomposition(int lmu, int lnu, int bound) {
  check_lengths(lmu, lnu);
  if (bound <= 0) bound = 2 * std::max(lmu, lnu) + 2;
  std::map<std::vector<int>, Point, std::greater<>> found;
  for (const Point& p : box_points(lmu, lnu, bound)) {
    auto signs = sign_vector(lmu, lnu, p);
    if (!generic(signs)) continue;
    found.try_emplace(std::move(signs), p);
  }
  std::vector<Chamber> out;
  for (auto& [signs, witness] : found) out.push_back({lmu, lnu, signs, witness});
  return out;
}

std::vector<Point> interior_points(const Chamber& chamber, int bound, std::size_t max_count) {
  std::vector<Point> out;
  for (const Point& p : box_points(chamber.lmu, chamber.lnu, bound)) {
    if (out.size() >= max_count) break;
    if (sign_vector(chamber.lmu, chamber.lnu, p) == chamber.signs) out.push_back(p);
  }
  return out;
}

Polynomial reduce_to_slice(const Polynomial& p, int lmu, int lnu) {
  const int n = lmu + lnu;
  std::vector<int> coeffs(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < lmu; ++i) coeffs[static_cast<std::size_t>(i)] = 1;
  for (int j = 0; j + 1 < lnu; ++j) coeffs[static_cast<std::size_t>(lmu + j)] = -1;
  return p.substitute(n - 1, Polynomial::linear(coeffs));
}

Polynomial chamber_polynomial(const Chamber& chamber) {
  const int lmu = chamber.lmu, lnu = chamber.lnu;
  const int n = lmu + lnu;
  if (n < 3) throw UnsupportedError("a genus-0 cover needs l(mu) + l(nu) >= 3");
  const Point& w = chamber.witness;
  if (!generic(sign_vector(lmu, lnu, w))) throw ArgumentError("chamber witness lies on a wall");

  Polynomial total(n);
  for_each_tree(n, [&](const Tree& t) {
    const int nodes = 2 * n - 2;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
    for (auto [a, b] : t.edges) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
    Polynomial product = Polynomial::constant(n, 1);
    std::vector<std::pair<int, int>> arrows;
    for (auto [a, b] : t.edges) {
      if (a < n || b < n) continue;
      // Leaves on a's side of the edge.
      LinearForm f{std::vector<int>(static_cast<std::size_t>(lmu), 0), std::vector<int>(static_cast<std::size_t>(lnu), 0)};
      std::vector<int> stack{a};
      std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
      seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        if (x < lmu) f.mu[static_cast<std::size_t>(x)] = 1;
        else if (x < n) f.nu[static_cast<std::size_t>(x - lmu)] = -1;
        for (int y : adj[static_cast<std::size_t>(x)])
          if (!seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = 1;
            stack.push_back(y);
          }
      }
      const long flow = f.evaluate(w.mu, w.nu);
      if (flow == 0) throw ArgumentError("chamber witness lies on a wall");
      // Positive flow runs from a's side to b's side, so a sits on a lower level.
      if (flow > 0) {
        arrows.emplace_back(a - n, b - n);
        product = product * f.polynomial();
      } else {
        arrows.emplace_back(b - n, a - n);
        product = product * (f.polynomial() * Rational(-1));
      }
    }
    const auto ext = linear_extensions(n - 2, arrows);
    total += product * Rational(BigInt(std::to_string(ext)));
  });
  return reduce_to_slice(total, lmu, lnu);
}

Rational tropical_count(const Point& p) {
  std::vector<int> mu(p.mu.begin(), p.mu.end()), nu(p.nu.begin(), p.nu.end());
  return line::double_hurwitz_labeled(0, Partition(mu), Partition(nu));
}

Rational evaluate(const Polynomial& p, const Point& point) {
  std::vector<long> values(point.mu);
  values.insert(values.end(), point.nu.begin(), point.nu.end());
  return p.evaluate(std::span<const long>(values));
}

Polynomial interpolate_chamber_polynomial(const Chamber& chamber) {
  const int lmu = chamber.lmu, lnu = chamber.lnu;
  const int n = lmu + lnu;
  if (n < 3) throw UnsupportedError("a genus-0 cover needs l(mu) + l(nu) >= 3");
  const auto basis = monomials(n, n - 1, n - 3);
  auto row_of = [&](const Point& p) {
    std::vector<Rational> row;
    for (const auto& e : basis) {
      Polynomial mono(n);
      mono.add_term(e, 1);
      row.push_back(evaluate(mono, p));
    }
    return row;
  };
  for (int bound = 2 * std::max(lmu, lnu) + 2; bound <= 32; bound *= 2) {
    // Greedily pick rank-increasing points, then extra points as a consistency check.
    std::vector<Point> chosen, extra;
    std::vector<std::vector<Rational>> rows;
    for (const Point& p : interior_points(chamber, bound, 50000)) {
      auto row = row_of(p);
      if (rows.size() < basis.size()) {
        RationalMatrix m(rows.size() + 1, basis.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t c = 0; c < basis.size(); ++c) m(r, c) = rows[r][c];
        for (std::size_t c = 0; c < basis.size(); ++c) m(rows.size(), c) = row[c];
        if (rank(m) == rows.size() + 1) {
          rows.push_back(std::move(row));
          chosen.push_back(p);
        } else if (extra.size() < basis.size() + 2) {
          extra.push_back(p);
        }
      } else if (extra.size() < basis.size() + 2) {
        extra.push_back(p);
      } else {
        break;
      }
    }
    if (rows.size() < basis.size()) continue;
    chosen.insert(chosen.end(), extra.begin(), extra.end());
    RationalMatrix a(chosen.size(), basis.size());
    std::vector<Rational> b;
    for (std::size_t r = 0; r < chosen.size(); ++r) {
      const auto row = row_of(chosen[r]);
      for (std::size_t c = 0; c < basis.size(); ++c) a(r, c) = row[c];
      b.push_back(tropical_count(chosen[r]));
    }
    const auto x = solve_unique(a, b);
    if (!x) throw CrossCheckError("tropical counts are not polynomial on the chamber");
    Polynomial p(n);
    for (std::size_t c = 0; c < basis.size(); ++c) p.add_term(basis[c], (*x)[c]);
    return p;
  }
  throw CrossCheckError("not enough interior lattice points to interpolate");
}

}  // namespace tropica::chambers
