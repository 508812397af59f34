#include "tropica/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tropica/errors.hpp"

namespace tropica {

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw ArgumentError("variable index out of range");
  Polynomial p(num_vars);
  Exponents e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::linear(std::span<const int> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  Polynomial p(n);
  for (int i = 0; i < n; ++i)
    if (coeffs[static_cast<std::size_t>(i)] != 0) {
      Exponents e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      p.add_term(e, coeffs[static_cast<std::size_t>(i)]);
    }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Polynomial::add_term(const Exponents& exps, const Rational& coeff) {
  if (static_cast<int>(exps.size()) != num_vars_) throw ArgumentError("exponent vector has wrong length");
  if (coeff == 0) return;
  Rational value(coeff);
  value.canonicalize();
  auto [it, inserted] = terms_.try_emplace(exps, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) throw ArgumentError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) throw ArgumentError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw ArgumentError("variable count mismatch");
  Polynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != num_vars_) throw ArgumentError("point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

Rational Polynomial::evaluate(std::span<const long> point) const {
  std::vector<Rational> q(point.begin(), point.end());
  return evaluate(std::span<const Rational>(q));
}

Polynomial Polynomial::substitute(int index, const Polynomial& replacement) const {
  if (index < 0 || index >= num_vars_) throw ArgumentError("variable index out of range");
  if (replacement.num_vars_ != num_vars_) throw ArgumentError("variable count mismatch");
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    const int power = rest[static_cast<std::size_t>(index)];
    rest[static_cast<std::size_t>(index)] = 0;
    Polynomial term(num_vars_);
    term.add_term(rest, c);
    for (int k = 0; k < power; ++k) term = term * replacement;
    out += term;
  }
  return out;
}

std::vector<std::pair<Polynomial::Exponents, Rational>> Polynomial::ordered_terms() const {
  std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
    const int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != num_vars_) throw ArgumentError("wrong number of variable names");
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : ordered_terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), mag.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

}  // namespace tropica
