#include "tropica/rational.hpp"

#include <string>

#include "tropica/errors.hpp"

namespace tropica {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_display_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ArgumentError("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw ArgumentError("malformed rational: " + s);
  if (r.get_den() == 0) throw ArgumentError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace tropica
