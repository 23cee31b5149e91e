#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hospfin {

/// Exact rational number. Every cost, fraction and payoff in the library is
/// carried as a Rational so that comparisons never depend on rounding.
using Rational = mpq_class;

/// Parses "num/den" or "num". Throws std::invalid_argument on malformed text
/// or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// Formats as "num/den" in lowest terms; integers keep the "/1" suffix.
std::string to_string(const Rational& value);

/// Nearest double, used only for LP export and human-readable output.
double to_double(const Rational& value);

}  // namespace hospfin
