#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bzeta::qcore {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);

/// value^exponent for integer exponent; 0^0 = 1, negative exponent of zero throws.
Rational pow(const Rational& base, std::int64_t exponent);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace bzeta::qcore
