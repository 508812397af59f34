#include "tropica/feynman_series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "tropica/canonical.hpp"
#include "tropica/elliptic_covers.hpp"
#include "tropica/errors.hpp"
#include "tropica/parallel.hpp"

namespace tropica::feynman {

namespace {

struct ExponentHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x4000);
    return h;
  }
};

}  // namespace

BigInt sigma(long n) {
  if (n < 1) throw ArgumentError("sigma needs a positive argument");
  BigInt total = 0;
  for (long m = 1; m * m <= n; ++m) {
    if (n % m) continue;
    total += m;
    if (m != n / m) total += n / m;
  }
  return total;
}

TruncatedSeries::TruncatedSeries(int num_x, int num_q, int q_bound, int x_bound)
    : num_x_(num_x), num_q_(num_q), q_bound_(q_bound), x_bound_(x_bound) {
  if (num_x < 0 || num_q < 0 || q_bound < 0 || x_bound < 0) throw ArgumentError("negative series dimension or bound");
}

Rational TruncatedSeries::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != num_x_ + num_q_) throw ArgumentError("exponent vector has wrong length");
  if (c == 0) return;
  int qdeg = 0;
  for (int i = 0; i < num_x_; ++i)
    if (std::abs(e[static_cast<std::size_t>(i)]) > x_bound_) return;
  for (int k = 0; k < num_q_; ++k) {
    const int ek = e[static_cast<std::size_t>(num_x_ + k)];
    if (ek < 0) throw ArgumentError("negative q exponent");
    qdeg += ek;
  }
  if (qdeg > q_bound_) return;
  Rational value(c);
  value.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.num_x_ != num_x_ || other.num_q_ != num_q_) throw ArgumentError("series variable mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries TruncatedSeries::multiply(const TruncatedSeries& a, const TruncatedSeries& b,
                                          const std::function<bool(const Exponents&)>& keep) {
  if (a.num_x_ != b.num_x_ || a.num_q_ != b.num_q_) throw ArgumentError("series variable mismatch");
  std::unordered_map<Exponents, Rational, ExponentHash> acc;
  Exponents e(static_cast<std::size_t>(a.num_x_ + a.num_q_));
  const int nx = a.num_x_;
  for (const auto& [ea, ca] : a.terms_) {
    int qa = 0;
    for (std::size_t i = static_cast<std::size_t>(nx); i < ea.size(); ++i) qa += ea[i];
    for (const auto& [eb, cb] : b.terms_) {
      int q = qa;
      for (std::size_t i = static_cast<std::size_t>(nx); i < eb.size(); ++i) q += eb[i];
      if (q > a.q_bound_) continue;
      bool inside = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (static_cast<int>(i) < nx && std::abs(e[i]) > a.x_bound_) inside = false;
      }
      if (!inside || (keep && !keep(e))) continue;
      acc[e] += ca * cb;
    }
  }
  TruncatedSeries out(a.num_x_, a.num_q_, a.q_bound_, a.x_bound_);
  for (auto& [ex, c] : acc)
    if (c != 0) out.terms_.emplace(ex, std::move(c));
  return out;
}

TruncatedSeries TruncatedSeries::constant_term_in_x() const {
  TruncatedSeries out(0, num_q_, q_bound_, 0);
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.begin() + num_x_, [](int x) { return x != 0; })) continue;
    out.add_term(Exponents(e.begin() + num_x_, e.end()), c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::collapse_q() const {
  TruncatedSeries out(num_x_, num_q_ > 0 ? 1 : 0, q_bound_, x_bound_);
  for (const auto& [e, c] : terms_) {
    Exponents f(e.begin(), e.begin() + num_x_);
    if (num_q_ > 0) f.push_back(std::accumulate(e.begin() + num_x_, e.end(), 0));
    out.add_term(f, c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int q_bound) const {
  TruncatedSeries out(num_x_, num_q_, std::min(q_bound, q_bound_), x_bound_);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    for (int i = 0; i < num_x_; ++i)
      if (e[static_cast<std::size_t>(i)]) out << "*x" << i + 1 << "^" << e[static_cast<std::size_t>(i)];
    for (int k = 0; k < num_q_; ++k)
      if (e[static_cast<std::size_t>(num_x_ + k)])
        out << "*q" << (num_q_ > 1 ? std::to_string(k + 1) : "") << "^" << e[static_cast<std::size_t>(num_x_ + k)];
  }
  return out.str();
}

TruncatedSeries eisenstein_e2(int q_bound) {
  TruncatedSeries e2(0, 1, q_bound, 0);
  e2.add_term({0}, 1);
  for (int n = 1; n <= q_bound; ++n) e2.add_term({n}, Rational(-24 * sigma(n)));
  return e2;
}

TruncatedSeries propagator_factor(int num_x, int num_q, int k1, int k2, bool k1_lower, int q_index, int d) {
  if (k1 == k2) throw UnsupportedError("propagator of a loop edge is not defined");
  if (k1 < 0 || k2 < 0 || k1 >= num_x || k2 >= num_x || q_index < 0 || q_index >= num_q)
    throw ArgumentError("propagator index out of range");
  if (d < 0) throw ArgumentError("negative truncation degree");
  TruncatedSeries p(num_x, num_q, 2 * d, 2 * d);
  const std::size_t lo = static_cast<std::size_t>(k1_lower ? k1 : k2);
  const std::size_t hi = static_cast<std::size_t>(k1_lower ? k2 : k1);
  const std::size_t q = static_cast<std::size_t>(num_x + q_index);
  TruncatedSeries::Exponents e(static_cast<std::size_t>(num_x + num_q), 0);
  for (int w = 1; w <= d; ++w) {
    e[lo] = 2 * w;
    e[hi] = -2 * w;
    p.add_term(e, w);
  }
  for (int a = 1; a <= d; ++a) {
    e[q] = 2 * a;
    for (int w = 1; w <= a; ++w) {
      if (a % w) continue;
      e[lo] = 2 * w;
      e[hi] = -2 * w;
      p.add_term(e, w);
      e[lo] = -2 * w;
      e[hi] = 2 * w;
      p.add_term(e, w);
    }
  }
  return p;
}

TruncatedSeries refined_integral(const graphs::Multigraph& g, const VertexOrder& order, int d) {
  const int nx = g.num_vertices(), nq = g.num_edges();
  if (static_cast<int>(order.size()) != nx) throw ArgumentError("order must list every vertex once");
  std::vector<int> position(static_cast<std::size_t>(nx), -1);
  for (int i = 0; i < nx; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= nx || position[static_cast<std::size_t>(v)] != -1) throw ArgumentError("order is not a permutation");
    position[static_cast<std::size_t>(v)] = i;
  }
  if (g.has_loop()) throw UnsupportedError("Feynman integrals are defined for loop-free graphs");

  std::vector<int> remaining(static_cast<std::size_t>(nx), 0);
  for (const auto& [u, v] : g.edges()) {
    ++remaining[static_cast<std::size_t>(u)];
    ++remaining[static_cast<std::size_t>(v)];
  }
  // A vertex exponent must be cancelled by its remaining factors, each moving it by at most 2d.
  auto keep = [&](const TruncatedSeries::Exponents& e) {
    for (int i = 0; i < nx; ++i)
      if (std::abs(e[static_cast<std::size_t>(i)]) > 2 * d * remaining[static_cast<std::size_t>(i)]) return false;
    return true;
  };

  const int x_bound = 2 * d * 3;
  TruncatedSeries product(nx, nq, 2 * d, std::max(x_bound, 2 * d));
  product.add_term(TruncatedSeries::Exponents(static_cast<std::size_t>(nx + nq), 0), 1);
  for (int k = 0; k < nq; ++k) {
    const auto [u, v] = g.edge(k);
    TruncatedSeries factor = propagator_factor(nx, nq, u, v, position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(v)], k, d);
    TruncatedSeries widened(nx, nq, 2 * d, product.x_bound());
    widened += factor;
    --remaining[static_cast<std::size_t>(u)];
    --remaining[static_cast<std::size_t>(v)];
    product = TruncatedSeries::multiply(product, widened, keep);
  }
  return product.constant_term_in_x();
}

TruncatedSeries coarse_integral(const graphs::Multigraph& g, const VertexOrder& order, int d) {
  return refined_integral(g, order, d).collapse_q();
}

Rational refined_coefficient(const TruncatedSeries& refined, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != refined.num_q() || refined.num_x() != 0)
    throw ArgumentError("multidegree does not match the series");
  TruncatedSeries::Exponents e;
  for (int ak : a) e.push_back(2 * ak);
  return refined.coefficient(e);
}

std::vector<VertexOrder> all_orders(int n) {
  VertexOrder base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<VertexOrder> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<Rational> feynman_graph_sum(int genus, int dmax) {
  const std::size_t width = static_cast<std::size_t>(std::max(dmax, 0));
  struct Job {
    const graphs::Multigraph* graph;
    VertexOrder order;
    Rational inv_aut;
  };
  const auto graphs_list = elliptic::enumerate_feynman_graphs(genus);
  std::vector<Job> jobs;
  for (const auto& g : graphs_list) {
    const Rational inv_aut(1, BigInt(std::to_string(graphs::automorphism_group_order(g))));
    for (auto& order : all_orders(g.num_vertices())) jobs.push_back({&g, std::move(order), inv_aut});
  }
  std::vector<std::vector<Rational>> partial(jobs.size(), std::vector<Rational>(width));
  parallel_for(jobs.size(), [&](std::size_t j) {
    const TruncatedSeries coarse = coarse_integral(*jobs[j].graph, jobs[j].order, dmax);
    for (int d = 1; d <= dmax; ++d)
      partial[j][static_cast<std::size_t>(d - 1)] = coarse.coefficient({2 * d}) * jobs[j].inv_aut;
  });
  std::vector<Rational> sum(width);
  for (const auto& row : partial)
    for (std::size_t d = 0; d < width; ++d) sum[d] += row[d];
  for (auto& x : sum) x.canonicalize();
  return sum;
}

MirrorReport mirror_check(int genus, int dmax) {
  if (genus < 2) throw ArgumentError("mirror check needs genus >= 2");
  if (dmax < 1) throw ArgumentError("mirror check needs dmax >= 1");
  MirrorReport report;
  report.genus = genus;
  report.dmax = dmax;
  report.feynman = feynman_graph_sum(genus, dmax);
  for (int d = 1; d <= dmax; ++d) {
    report.hurwitz.push_back(elliptic::simple_hurwitz_tropical(d, genus));
    const bool same = report.hurwitz.back() == report.feynman[static_cast<std::size_t>(d - 1)];
    report.agree.push_back(same);
    report.all_agree = report.all_agree && same;
  }
  return report;
}

}  // namespace tropica::feynman
