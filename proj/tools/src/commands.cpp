#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "commands.hpp"
#include "tropica/tropica.hpp"

namespace tropica::cli {

namespace {

using nlohmann::json;

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      line += c;
    } else {
      line += '"';
      for (char ch : c) {
        if (ch == '"') line += '"';
        line += ch;
      }
      line += '"';
    }
  }
  return line + "\n";
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string frac(const Rational& r) { return to_fraction_string(r); }
std::string shown(const Rational& r) { return to_display_string(r); }

// Graph text on one line, records separated by "; ".
std::string one_line(const graphs::Multigraph& g) {
  std::string t = graphs::to_text(g);
  while (!t.empty() && t.back() == '\n') t.pop_back();
  std::string out;
  for (char c : t) {
    if (c == '\n')
      out += "; ";
    else
      out += c;
  }
  return out;
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out(v);
  for (int& x : out) ++x;
  return out;
}

const char* sign_char(int s) { return s > 0 ? "+" : "-"; }

json polynomial_terms(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.ordered_terms()) terms.push_back({{"exponents", e}, {"coefficient", frac(c)}});
  return terms;
}

Report double_hurwitz(const Params& p) {
  const int genus = p.integer("genus");
  const Partition mu = Partition::parse(p.str("mu"));
  const Partition nu = Partition::parse(p.str("nu"));
  const bool list = p.flag("list-covers");

  const auto covers = line::enumerate_line_covers(genus, mu, nu);
  std::vector<line::CoverMultiplicity> mult(covers.size());
  parallel_for(covers.size(), [&](std::size_t i) { mult[i] = line::multiplicity(covers[i]); });
  Rational total = 0;
  for (const auto& m : mult) total += m.value;
  total.canonicalize();
  const Rational labeled = total * Rational(mu.part_symmetry_order() * nu.part_symmetry_order());

  Report r;
  json rows = json::array();
  r.csv = csv_row({"canonical", "weight_product", "forks", "wieners", "multiplicity"});
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto& m = mult[i];
    rows.push_back({{"canonical", covers[i].key()},
                    {"graph", graphs::to_text(covers[i].source())},
                    {"weightProduct", m.weight_product.get_str()},
                    {"forks", m.forks},
                    {"wieners", m.wieners},
                    {"automorphisms", m.automorphisms},
                    {"multiplicity", frac(m.value)}});
    r.csv += csv_row({covers[i].key(), m.weight_product.get_str(), std::to_string(m.forks), std::to_string(m.wieners),
                      frac(m.value)});
    if (list) r.text += covers[i].key() + "  " + shown(m.value) + "\n";
  }
  r.document = {{"genus", genus},
                {"mu", mu.parts()},
                {"nu", nu.parts()},
                {"s", line::num_branch_points(genus, mu, nu)},
                {"covers", rows},
                {"total", frac(total)},
                {"labeled", frac(labeled)}};
  r.text += list ? "total " + shown(total) + "\n" : shown(total) + "\n";
  return r;
}

Report chambers_cmd(const Params& p, bool force) {
  const int lmu = p.integer("lmu");
  const int lnu = p.integer("lnu");
  if (lmu < 1 || lnu < 1) throw ArgumentError("lmu and lnu must be positive");
  if (lmu + lnu > 6 && !force) throw SizeGuardError("chambers with lmu + lnu > 6 need --force");
  const bool verify = p.flag("verify");
  const auto names = chambers::variable_names(lmu, lnu);
  const auto ws = chambers::walls(lmu, lnu);
  const auto cs = chambers::chamber_decomposition(lmu, lnu);

  std::vector<Polynomial> polys(cs.size(), Polynomial(lmu + lnu));
  std::vector<char> agree(cs.size(), 1);
  parallel_for(cs.size(), [&](std::size_t i) {
    polys[i] = chambers::chamber_polynomial(cs[i]);
    if (verify) agree[i] = chambers::interpolate_chamber_polynomial(cs[i]) == polys[i];
  });

  Report r;
  json wall_rows = json::array();
  r.text = "walls " + std::to_string(ws.size()) + "\n";
  for (const auto& w : ws) {
    wall_rows.push_back({{"form", w.to_string()}, {"mu", w.mu}, {"nu", w.nu}});
    r.text += "  " + w.to_string() + "\n";
  }
  r.text += "chambers " + std::to_string(cs.size()) + "\n";
  r.csv = csv_row({"signs", "witness_mu", "witness_nu", "polynomial"});
  json chamber_rows = json::array();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string signs;
    for (int s : cs[i].signs) signs += sign_char(s);
    const std::string poly = polys[i].to_string(names);
    json row = {{"signs", cs[i].signs},
                {"witness", {{"mu", cs[i].witness.mu}, {"nu", cs[i].witness.nu}}},
                {"polynomial", poly},
                {"terms", polynomial_terms(polys[i])}};
    if (verify) row["interpolationAgrees"] = static_cast<bool>(agree[i]);
    chamber_rows.push_back(row);
    r.text += "  [" + signs + "] " + poly + "\n";
    r.csv += csv_row({signs, join(cs[i].witness.mu), join(cs[i].witness.nu), poly});
    if (!agree[i]) r.status = kCrossCheck;
  }
  r.document = {{"lmu", lmu},
                {"lnu", lnu},
                {"variables", names},
                {"walls", wall_rows},
                {"chambers", chamber_rows}};
  return r;
}

Report elliptic_cmd(const Params& p, bool force) {
  const int degree = p.integer("degree");
  const int genus = p.integer("genus");
  if (degree < 1) throw ArgumentError("degree must be positive");
  if (genus < 2) throw ArgumentError("genus must be at least 2");
  if ((genus > 3 || degree > 6) && !force) throw SizeGuardError("elliptic covers beyond genus 3 or degree 6 need --force");
  const bool per_graph = p.flag("per-graph");
  const bool list = p.flag("list-covers");

  const auto graphs_list = elliptic::enumerate_feynman_graphs(genus);
  struct Job {
    std::size_t graph;
    feynman::VertexOrder order;
    std::map<std::vector<int>, Rational> counts;
    Rational total;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < graphs_list.size(); ++i)
    for (auto& order : feynman::all_orders(graphs_list[i].num_vertices())) jobs.push_back({i, std::move(order), {}, 0});
  parallel_for(jobs.size(), [&](std::size_t j) {
    for (const auto& c : elliptic::labeled_covers(graphs_list[jobs[j].graph], jobs[j].order, degree)) {
      const Rational w(c.weight_product());
      jobs[j].counts[c.multidegree()] += w;
      jobs[j].total += w;
    }
  });

  Report r;
  Rational total = 0;
  json graph_rows = json::array();
  r.csv = csv_row({"graph", "order", "multidegree", "count"});
  std::size_t j = 0;
  for (std::size_t i = 0; i < graphs_list.size(); ++i) {
    const auto aut = graphs::automorphism_group_order(graphs_list[i]);
    Rational graph_total = 0;
    json order_rows = json::array();
    std::string order_text;
    for (; j < jobs.size() && jobs[j].graph == i; ++j) {
      json md = json::array();
      for (const auto& [a, c] : jobs[j].counts) {
        md.push_back({{"multidegree", a}, {"count", frac(c)}});
        r.csv += csv_row({std::to_string(i + 1), join(one_based(jobs[j].order), " "), join(a, " "), frac(c)});
      }
      order_rows.push_back({{"order", one_based(jobs[j].order)}, {"multidegrees", md}, {"total", frac(jobs[j].total)}});
      order_text += "    order " + join(one_based(jobs[j].order)) + ": " + shown(jobs[j].total) + "\n";
      graph_total += jobs[j].total;
    }
    const Rational contribution = graph_total / Rational(BigInt(std::to_string(aut)));
    total += contribution;
    graph_rows.push_back({{"graph", graphs::to_text(graphs_list[i])},
                          {"automorphisms", aut},
                          {"orders", order_rows},
                          {"total", frac(graph_total)},
                          {"contribution", frac(contribution)}});
    if (per_graph) {
      r.text += "graph " + std::to_string(i + 1) + " [" + one_line(graphs_list[i]) + "] aut " + std::to_string(aut) +
                ": " + shown(graph_total) + "\n" + order_text;
    }
  }
  total.canonicalize();
  r.document = {{"degree", degree}, {"genus", genus}, {"graphs", graph_rows}, {"total", frac(total)}};

  if (list) {
    const auto covers = elliptic::enumerate_elliptic_covers(degree, genus);
    std::vector<elliptic::EllipticMultiplicity> mult(covers.size());
    parallel_for(covers.size(), [&](std::size_t i) { mult[i] = elliptic::multiplicity(covers[i]); });
    Rational direct = 0;
    json rows = json::array();
    for (std::size_t i = 0; i < covers.size(); ++i) {
      direct += mult[i].value;
      rows.push_back({{"canonical", covers[i].key()},
                      {"graph", graphs::to_text(covers[i].source())},
                      {"weightProduct", mult[i].weight_product.get_str()},
                      {"automorphisms", mult[i].automorphisms},
                      {"multiplicity", frac(mult[i].value)}});
      r.text += covers[i].key() + "  " + shown(mult[i].value) + "\n";
    }
    direct.canonicalize();
    r.document["covers"] = rows;
    r.document["directTotal"] = frac(direct);
    if (direct != total) r.status = kCrossCheck;
  }
  r.text += (per_graph || list) ? "total " + shown(total) + "\n" : shown(total) + "\n";
  return r;
}

Report feynman_cmd(const Params& p) {
  const std::string path = p.str("graph");
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const graphs::Multigraph g = graphs::from_text(buf.str());
  const int dmax = p.integer("dmax");
  if (dmax < 0) throw ArgumentError("dmax must be nonnegative");

  feynman::VertexOrder order;
  {
    const std::string text = p.has("order") ? p.str("order") : "";
    if (text.empty()) {
      order.resize(static_cast<std::size_t>(g.num_vertices()));
      std::iota(order.begin(), order.end(), 0);
    } else {
      std::string token;
      std::stringstream ss(text);
      while (std::getline(ss, token, ',')) {
        try {
          order.push_back(std::stoi(token) - 1);
        } catch (const std::logic_error&) {
          throw ArgumentError("bad vertex order: " + text);
        }
      }
    }
    std::vector<int> sorted(order);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) throw ArgumentError("order must be a permutation of 1..V");
    if (static_cast<int>(order.size()) != g.num_vertices()) throw ArgumentError("order must list every vertex once");
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) != 3) throw ArgumentError("Feynman graphs are 3-valent");
  if (g.has_loop()) throw UnsupportedError("graphs with loops carry no propagator");

  const auto refined = feynman::refined_integral(g, order, dmax);
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (const auto& [e, c] : refined.terms()) {
    std::vector<int> a(e);
    for (int& x : a) x /= 2;
    terms.emplace_back(std::move(a), c);
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const int sx = std::accumulate(x.first.begin(), x.first.end(), 0);
    const int sy = std::accumulate(y.first.begin(), y.first.end(), 0);
    return sx != sy ? sx < sy : x.first < y.first;
  });

  Report r;
  json rows = json::array();
  r.csv = csv_row({"multidegree", "coefficient"});
  for (const auto& [a, c] : terms) {
    rows.push_back({{"multidegree", a}, {"coefficient", frac(c)}});
    r.text += "(" + join(a) + ") " + shown(c) + "\n";
    r.csv += csv_row({join(a, " "), frac(c)});
  }
  const auto coarse = refined.collapse_q();
  json coarse_rows = json::array();
  for (int d = 0; d <= dmax; ++d) coarse_rows.push_back(frac(coarse.coefficient({2 * d})));
  r.document = {{"graph", graphs::to_text(g)},
                {"order", one_based(order)},
                {"dmax", dmax},
                {"refined", rows},
                {"coarse", coarse_rows}};
  return r;
}

Report mirror_cmd(const Params& p, bool force) {
  const int genus = p.integer("genus");
  const int dmax = p.integer("dmax");
  if (genus < 2) throw ArgumentError("genus must be at least 2");
  if (dmax < 1) throw ArgumentError("dmax must be positive");
  if ((genus > 3 || dmax > 6) && !force) throw SizeGuardError("mirror check beyond genus 3 or dmax 6 needs --force");
  const auto rep = feynman::mirror_check(genus, dmax);

  Report r;
  json rows = json::array();
  r.csv = csv_row({"d", "hurwitz", "feynman", "agree"});
  for (int d = 1; d <= dmax; ++d) {
    const auto i = static_cast<std::size_t>(d - 1);
    rows.push_back({{"d", d}, {"hurwitz", frac(rep.hurwitz[i])}, {"feynman", frac(rep.feynman[i])},
                    {"agree", static_cast<bool>(rep.agree[i])}});
    r.text += "q^" + std::to_string(2 * d) + " " + shown(rep.hurwitz[i]) + " " + shown(rep.feynman[i]) + " " +
              (rep.agree[i] ? "ok" : "MISMATCH") + "\n";
    r.csv += csv_row({std::to_string(d), frac(rep.hurwitz[i]), frac(rep.feynman[i]), rep.agree[i] ? "true" : "false"});
  }
  r.document = {{"genus", genus}, {"dmax", dmax}, {"rows", rows}, {"allAgree", rep.all_agree}};
  if (!rep.all_agree) r.status = kCrossCheck;
  return r;
}

Report graph_complex_cmd(const Params& p, bool force) {
  const int genus = p.integer("genus");
  if (genus < 2) throw ArgumentError("genus must be at least 2");
  if (genus > 4 && !force) throw SizeGuardError("graph complex beyond genus 4 needs --force");
  const int max_edges = 3 * genus - 3;
  int lo = genus + 1;
  int hi = max_edges;
  if (p.has("edges")) {
    lo = hi = p.integer("edges");
    if (lo < 1) throw ArgumentError("edges must be positive");
  }
  // rank of d: G_n -> G_{n-1} for every n that is needed
  std::map<int, std::size_t> dims;
  std::map<int, std::size_t> ranks;
  for (int n = lo - 1; n <= hi + 1; ++n) {
    dims[n] = n >= 1 && n <= max_edges ? gc::generators(genus, n).size() : 0;
  }
  for (int n = lo; n <= hi + 1; ++n)
    ranks[n] = dims[n] && dims[n - 1] ? rank(gc::differential_matrix(genus, n)) : 0;

  Report r;
  json rows = json::array();
  r.csv = csv_row({"edges", "dimension", "rank", "homology"});
  for (int n = lo; n <= hi; ++n) {
    const std::size_t h = dims[n] - ranks[n] - ranks[n + 1];
    rows.push_back({{"edges", n}, {"dimension", dims[n]}, {"rank", ranks[n]}, {"homology", h}});
    r.text += "edges " + std::to_string(n) + ": dim " + std::to_string(dims[n]) + ", rank " +
              std::to_string(ranks[n]) + ", homology " + std::to_string(h) + "\n";
    r.csv += csv_row({std::to_string(n), std::to_string(dims[n]), std::to_string(ranks[n]), std::to_string(h)});
  }
  r.document = {{"genus", genus}, {"rows", rows}};
  return r;
}

Report moduli_cmd(const Params& p, bool force) {
  const int genus = p.integer("genus");
  const int marks = p.integer("marks");
  if (genus < 0 || marks < 0) throw ArgumentError("genus and marks must be nonnegative");
  const bool show_poset = p.flag("poset");
  const auto types = moduli::enumerate_types(genus, marks, force);
  const auto poset = moduli::build_poset(types);
  const int top = moduli::max_dimension(genus, marks);

  Report r;
  json rows = json::array();
  r.csv = csv_row({"index", "dimension", "folded", "graph"});
  std::size_t maximal = 0;
  std::size_t folded_maximal = 0;
  std::string listing;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto& t = types[i];
    const bool folded = poset.folded[i];
    if (t.dimension == top) {
      ++maximal;
      if (folded) ++folded_maximal;
    }
    rows.push_back({{"index", i}, {"graph", graphs::to_text(t.graph)}, {"key", t.key}, {"dimension", t.dimension},
                    {"folded", folded}});
    listing += "  " + std::to_string(i) + " dim " + std::to_string(t.dimension) + (folded ? " folded" : "") + " [" +
               one_line(t.graph) + "]\n";
    r.csv += csv_row({std::to_string(i), std::to_string(t.dimension), folded ? "true" : "false", one_line(t.graph)});
  }
  r.document = {{"genus", genus},
                {"marks", marks},
                {"maxDimension", top},
                {"maximal", maximal},
                {"foldedMaximal", folded_maximal},
                {"types", rows}};
  r.text = std::to_string(types.size()) + " types\nmax dimension " + std::to_string(top) + "\n" +
           std::to_string(maximal) + " maximal, " + std::to_string(folded_maximal) + " folded\n";
  if (show_poset) {
    json covers = json::array();
    r.text += "types\n" + listing + "covers\n";
    for (const auto& [a, b] : poset.covers) {
      covers.push_back({a, b});
      r.text += "  " + std::to_string(a) + " < " + std::to_string(b) + "\n";
    }
    r.document["poset"] = covers;
  }
  return r;
}

Report oracle_line(const Params& p, bool force) {
  const int genus = p.integer("genus");
  const Partition mu = Partition::parse(p.str("mu"));
  const Partition nu = Partition::parse(p.str("nu"));
  oracle::OracleOptions options;
  options.force = force;
  const Rational value = oracle::hurwitz_line(genus, mu, nu, options);
  Report r;
  r.document = {{"genus", genus}, {"mu", mu.parts()}, {"nu", nu.parts()}, {"value", frac(value)}};
  r.text = shown(value) + "\n";
  r.csv = csv_row({"genus", "mu", "nu", "value"}) + csv_row({std::to_string(genus), mu.to_string(), nu.to_string(), frac(value)});
  return r;
}

Report oracle_elliptic(const Params& p, bool force) {
  const int degree = p.integer("degree");
  const int genus = p.integer("genus");
  if (degree < 1) throw ArgumentError("degree must be positive");
  if (degree > oracle::kMaxOracleDegree && !force) throw SizeGuardError("oracle degree above 6 needs --force");
  oracle::OracleOptions options;
  options.force = force;
  const Rational value = oracle::hurwitz_elliptic(degree, genus, options);
  Report r;
  r.document = {{"degree", degree}, {"genus", genus}, {"value", frac(value)}};
  r.text = shown(value) + "\n";
  r.csv = csv_row({"degree", "genus", "value"}) + csv_row({std::to_string(degree), std::to_string(genus), frac(value)});
  return r;
}

}  // namespace

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> table = {
      {"double-hurwitz", {"genus", "mu", "nu"}, {"list-covers"}, true},
      {"chambers", {"lmu", "lnu"}, {"verify"}, true},
      {"elliptic", {"degree", "genus"}, {"per-graph", "list-covers"}, true},
      {"feynman", {"graph", "dmax"}, {"order"}, false},
      {"mirror-check", {"genus", "dmax"}, {}, true},
      {"graph-complex", {"genus"}, {"edges", "dump-matrix"}, true},
      {"moduli", {"genus", "marks"}, {"poset"}, true},
      {"oracle line", {"genus", "mu", "nu"}, {}, true},
      {"oracle elliptic", {"degree", "genus"}, {}, true},
  };
  return table;
}

const std::set<std::string>& integer_params() {
  static const std::set<std::string> names = {"genus", "degree", "dmax", "edges", "lmu", "lnu", "marks"};
  return names;
}

Report run_command(const std::string& command, const Params& p, bool force) {
  if (command == "double-hurwitz") return double_hurwitz(p);
  if (command == "chambers") return chambers_cmd(p, force);
  if (command == "elliptic") return elliptic_cmd(p, force);
  if (command == "feynman") return feynman_cmd(p);
  if (command == "mirror-check") return mirror_cmd(p, force);
  if (command == "graph-complex") return graph_complex_cmd(p, force);
  if (command == "moduli") return moduli_cmd(p, force);
  if (command == "oracle line") return oracle_line(p, force);
  if (command == "oracle elliptic") return oracle_elliptic(p, force);
  throw ArgumentError("unknown command: " + command);
}

void dump_matrix(int genus, int edges, const std::string& path) {
  const RationalMatrix m = gc::differential_matrix(genus, edges);
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write matrix file: " + path);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out << i << ' ' << j << ' ' << to_fraction_string(m(i, j)) << '\n';
}

}  // namespace tropica::cli
