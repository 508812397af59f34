// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tropica/tropica.hpp"

using namespace tropica;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string shown(const Rational& r) { return to_display_string(r); }

Outcome line_example() {
  Outcome o;
  const auto covers = line::enumerate_line_covers(1, Partition({3}), Partition({3}));
  const Rational total = line::double_hurwitz_tropical(1, Partition({3}), Partition({3}));
  const bool one_class = covers.size() == 1 && line::multiplicity(covers[0]).value == 2;
  o.pass = total == 2 && one_class;
  o.detail = "H_1((3),(3)) = " + shown(total) + ", " + std::to_string(covers.size()) + " class(es)";
  if (!covers.empty()) o.detail += ", multiplicity " + shown(line::multiplicity(covers[0]).value);
  return o;
}

Outcome elliptic_example() {
  Outcome o;
  const Rational direct = elliptic::simple_hurwitz_direct(4, 2);
  const Rational labeled = elliptic::simple_hurwitz_tropical(4, 2);
  const Rational feynman = feynman::feynman_graph_sum(2, 4)[3];
  const auto covers = elliptic::enumerate_elliptic_covers(4, 2);
  std::multiset<Rational> values;
  bool doubled = true;
  for (const auto& c : covers) values.insert(elliptic::multiplicity(c).value);
  for (int v : {8, 12, 6, 2, 1}) {
    bool paired = false;
    for (const auto& c : covers)
      if (elliptic::multiplicity(c).value == v && !(c.reflected() == c)) {
        const auto r = c.reflected();
        for (const auto& x : covers)
          if (x == r && elliptic::multiplicity(x).value == v) paired = true;
      }
    doubled = doubled && paired;
  }
  const bool agree = direct == labeled && labeled == feynman;
  const bool is_58 = direct == 58;
  o.pass = agree && doubled && is_58;
  std::ostringstream s;
  s << "direct " << shown(direct) << ", labeled " << shown(labeled) << ", feynman " << shown(feynman)
    << (agree ? " (routes agree)" : " (routes DISAGREE)") << "; expected 58"
    << (is_58 ? "" : " NOT MET") << "; {8,12,6,2,1} reflection-doubled: " << (doubled ? "yes" : "no")
    << "; multiset {";
  bool first = true;
  for (const auto& v : values) {
    s << (first ? "" : ",") << shown(v);
    first = false;
  }
  s << "}";
  o.detail = s.str();
  return o;
}

Outcome correspondence() {
  Outcome o;
  int cases = 0;
  int failures = 0;
  for (int d = 1; d <= 5; ++d)
    for (int g = 0; g <= 2; ++g)
      for (const auto& mu : partitions_of(d))
        for (const auto& nu : partitions_of(d)) {
          if (line::num_branch_points(g, mu, nu) <= 0) continue;
          ++cases;
          if (line::double_hurwitz_tropical(g, mu, nu) != oracle::hurwitz_line(g, mu, nu)) ++failures;
        }
  const int line_cases = cases;
  for (int g = 2; g <= 3; ++g)
    for (int d = 1; d <= 5; ++d) {
      ++cases;
      const Rational expected = oracle::hurwitz_elliptic(d, g);
      if (elliptic::simple_hurwitz_tropical(d, g) != expected || elliptic::simple_hurwitz_direct(d, g) != expected)
        ++failures;
    }
  o.pass = failures == 0;
  o.detail = std::to_string(line_cases) + " line cases, " + std::to_string(cases - line_cases) + " elliptic cases, " +
             std::to_string(failures) + " mismatches";
  return o;
}

Outcome chamber_suite() {
  Outcome o;
  const auto ws = chambers::walls(2, 2);
  const auto cs = chambers::chamber_decomposition(2, 2);
  bool evaluations = true;
  std::size_t min_points = 1000;
  std::string target_poly;
  int target_degree = -1;
  for (const auto& c : cs) {
    const Polynomial p = chambers::chamber_polynomial(c);
    const Polynomial q = chambers::interpolate_chamber_polynomial(c);
    const auto pts = chambers::interior_points(c, 8, 8);
    min_points = std::min(min_points, pts.size());
    evaluations = evaluations && p == q && pts.size() >= 5;
    for (const auto& pt : pts) evaluations = evaluations && chambers::evaluate(p, pt) == chambers::tropical_count(pt);
    // mu1 > nu1 and mu1 > nu2
    if (c.signs == std::vector<int>{1, 1}) {
      target_poly = p.to_string(chambers::variable_names(2, 2));
      target_degree = p.degree();
    }
  }
  o.pass = ws.size() == 2 && cs.size() == 4 && evaluations && target_degree == 1;
  o.detail = std::to_string(ws.size()) + " walls, " + std::to_string(cs.size()) + " chambers, >= " +
             std::to_string(min_points) + " points each, mu1>nu1,mu1>nu2 -> " + target_poly;
  return o;
}

Outcome mirror() {
  Outcome o;
  const auto report = feynman::mirror_check(2, 4);
  o.pass = report.all_agree;
  std::string coeffs;
  for (std::size_t i = 0; i < report.hurwitz.size(); ++i)
    coeffs += (i ? "," : "") + shown(report.hurwitz[i]) + "=" + shown(report.feynman[i]);
  o.detail = "q^2..q^8: " + coeffs;
  return o;
}

Outcome graph_complex() {
  Outcome o;
  bool squares = true;
  for (int g = 2; g <= 4; ++g)
    for (int n = g + 1; n <= 3 * g - 3; ++n)
      for (const auto& x : gc::generators(g, n))
        squares = squares && gc::differential(gc::differential(gc::chain_of(x))).is_zero();
  const bool w4 = gc::wheel_class(4).is_zero();
  const auto w3 = gc::wheel_class(3);
  const bool w3_cycle = !w3.is_zero() && gc::differential(w3).is_zero() && !gc::is_boundary(w3);
  const std::size_t h = gc::homology_dimension(3, 6);
  o.pass = squares && w4 && w3_cycle && h == 1;
  o.detail = std::string("d^2=0: ") + (squares ? "yes" : "no") + ", W4=0: " + (w4 ? "yes" : "no") +
             ", W3 nontrivial cycle: " + (w3_cycle ? "yes" : "no") + ", dim H(3,6)=" + std::to_string(h);
  return o;
}

Outcome moduli_counts() {
  Outcome o;
  auto maximal = [](const std::vector<moduli::CombinatorialType>& types, int top) {
    std::size_t n = 0;
    for (const auto& t : types) n += t.dimension == top;
    return n;
  };
  const auto m04 = moduli::enumerate_types(0, 4);
  const auto m12 = moduli::enumerate_types(1, 2);
  const auto m20 = moduli::enumerate_types(2, 0);
  const auto m05 = moduli::enumerate_types(0, 5);
  const auto poset = moduli::build_poset(m12);
  std::size_t folded = 0;
  for (std::size_t i = 0; i < m12.size(); ++i) folded += m12[i].dimension == 2 && poset.folded[i];
  const int d04 = moduli::max_dimension(0, 4), d12 = moduli::max_dimension(1, 2), d20 = moduli::max_dimension(2, 0);
  o.pass = m04.size() == 4 && m12.size() == 5 && folded == 1 && maximal(m20, 3) == 2 && d04 == 1 && d12 == 2 &&
           d20 == 3 && maximal(m05, 2) == 15;
  o.detail = "(0,4) " + std::to_string(m04.size()) + " types, (1,2) " + std::to_string(m12.size()) + " types/" +
             std::to_string(folded) + " folded maximal, (2,0) " + std::to_string(maximal(m20, 3)) +
             " maximal, dims " + std::to_string(d04) + "," + std::to_string(d12) + "," + std::to_string(d20) +
             ", (0,5) " + std::to_string(maximal(m05, 2)) + " maximal";
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(2024);
  std::size_t relabelings = 0;
  bool canonical_ok = true;
  std::vector<graphs::Multigraph> instances = elliptic::enumerate_feynman_graphs(3, true);
  for (const auto& t : moduli::enumerate_types(1, 3)) instances.push_back(t.graph);
  for (const auto& c : line::enumerate_line_covers(1, Partition({2, 2}), Partition({3, 1}))) instances.push_back(c.source());
  for (const auto& g : instances) {
    const auto key = graphs::canonical_encoding(g);
    for (int i = 0; i < 100; ++i) {
      canonical_ok = canonical_ok && graphs::canonical_encoding(tropica::testing::random_relabel(g, rng)) == key;
      ++relabelings;
    }
  }
  bool aut_ok = true;
  std::size_t covers = 0;
  for (int d = 1; d <= 4; ++d)
    for (int g = 0; g <= 2; ++g)
      for (const auto& mu : partitions_of(d))
        for (const auto& nu : partitions_of(d)) {
          if (line::num_branch_points(g, mu, nu) <= 0) continue;
          for (const auto& c : line::enumerate_line_covers(g, mu, nu)) {
            const auto m = line::multiplicity(c);
            const auto aut = graphs::count_colored_automorphisms(c.source(), c.vertex_colors(), c.half_edge_colors());
            aut_ok = aut_ok && aut == (std::uint64_t{1} << (m.forks + m.wieners));
            ++covers;
          }
        }
  std::uint64_t loop_assignments = 0;
  for (int d = 1; d <= 4; ++d) loop_assignments += elliptic::loop_graph_assignments(d, 2) + elliptic::loop_graph_assignments(d, 3);
  bool stable = true;
  for (int genus = 2; genus <= 3; ++genus)
    for (const auto& g : elliptic::enumerate_feynman_graphs(genus))
      for (const auto& order : feynman::all_orders(g.num_vertices()))
        for (int d = 1; d <= 3; ++d)
          stable = stable && feynman::refined_integral(g, order, d + 1).truncated(2 * d) ==
                                 feynman::refined_integral(g, order, d);
  stable = stable && feynman::eisenstein_e2(8).truncated(5) == feynman::eisenstein_e2(5);
  o.pass = canonical_ok && aut_ok && loop_assignments == 0 && stable;
  o.detail = std::to_string(relabelings) + " relabelings " + (canonical_ok ? "ok" : "FAILED") + ", " +
             std::to_string(covers) + " covers |Aut|=2^(f+w) " + (aut_ok ? "ok" : "FAILED") + ", loop assignments " +
             std::to_string(loop_assignments) + ", truncation " + (stable ? "stable" : "UNSTABLE");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  const std::vector<Criterion> criteria = {
      {1, "double Hurwitz example", 1.0, line_example},
      {2, "elliptic N_{4,2} three ways", 60.0, elliptic_example},
      {3, "correspondence suite", 600.0, correspondence},
      {4, "chamber suite (2,2)", 30.0, chamber_suite},
      {5, "mirror check genus 2", 120.0, mirror},
      {6, "graph complex", 120.0, graph_complex},
      {7, "moduli counts", 10.0, moduli_counts},
      {8, "property suites", 600.0, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("criterion %d: %s  %s  [%.2f s, limit %.0f s%s]  %s\n", c.id, pass ? "PASS" : "FAIL", c.title, secs,
                c.limit_seconds, in_time ? "" : ", TOO SLOW", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
