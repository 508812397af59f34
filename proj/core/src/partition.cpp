#include "tropica/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "tropica/errors.hpp"

namespace tropica {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ArgumentError("partition must have at least one part");
  for (int p : parts_)
    if (p <= 0) throw ArgumentError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw ArgumentError("bad partition entry: " + token);
      parts.push_back(value);
    } catch (const std::logic_error&) {
      throw ArgumentError("bad partition entry: " + token);
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '\t')
      flush();
    else
      token.push_back(c);
  }
  flush();
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

BigInt Partition::centralizer_order() const {
  std::map<int, int> mult;
  for (int p : parts_) ++mult[p];
  BigInt z = 1;
  for (auto [part, m] : mult) {
    for (int i = 2; i <= m; ++i) z *= i;
    for (int i = 0; i < m; ++i) z *= part;
  }
  return z;
}

BigInt Partition::part_symmetry_order() const {
  std::map<int, int> mult;
  for (int p : parts_) ++mult[p];
  BigInt z = 1;
  for (auto [part, m] : mult)
    for (int i = 2; i <= m; ++i) z *= i;
  return z;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << ')';
  return out.str();
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> result;
  if (n <= 0) return result;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      result.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return result;
}

}  // namespace tropica
