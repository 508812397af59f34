#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropica/rational.hpp"

namespace tropica {

/// Dense matrix over Q. The matrices in this library are small (a few hundred
/// columns at most), so exact dense elimination is adequate.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by Gauss-Jordan elimination with first-nonzero pivoting (deterministic).
std::size_t rank(RationalMatrix m);

/// Solves A x = b. Returns std::nullopt when the system is inconsistent or
/// when the solution is not unique.
std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b);

}  // namespace tropica
