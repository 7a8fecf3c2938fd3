#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace bicolor {

// Exact rational scalar. GMP keeps every value in lowest terms.
using Rat = mpq_class;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);

// Returns the nonnegative square root when r is a square of a rational.
std::optional<Rat> rat_sqrt(const Rat& r);

Rat rat_pow(const Rat& base, int exponent);

}  // namespace bicolor
