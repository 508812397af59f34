#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tropica/rational.hpp"

namespace tropica {

/// Multivariate polynomial with rational coefficients in a fixed number of variables.
class Polynomial {
public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(int num_vars, const Rational& c);
  static Polynomial variable(int num_vars, int index);
  /// sum_i coeffs[i] * x_i
  static Polynomial linear(std::span<const int> coeffs);

  int num_vars() const { return num_vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const Exponents& exps, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(std::span<const long> point) const;

  /// Replaces variable `index` by `replacement` (a polynomial in the same variables).
  Polynomial substitute(int index, const Polynomial& replacement) const;

  /// Terms ordered by descending total degree, then descending exponent
  /// vector (so earlier variables lead). Example: "2*m1 - n1 + 3".
  std::string to_string(const std::vector<std::string>& names) const;
  /// Same order as to_string.
  std::vector<std::pair<Exponents, Rational>> ordered_terms() const;

private:
  int num_vars_ = 0;
  std::map<Exponents, Rational> terms_;
};

}  // namespace tropica
