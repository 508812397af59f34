#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropica {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Always "p/q", also for integers ("2/1"); used by every machine-readable output.
std::string to_fraction_string(const Rational& r);

/// Shortest human form: "2" for integers, "1/2" otherwise.
std::string to_display_string(const Rational& r);

/// Accepts "p", "p/q" and "-p/q".
Rational parse_rational(std::string_view text);

}  // namespace tropica
