#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wittforge {

using Integer = mpz_class;
using Rational = mpq_class;

// Wide intermediate for exact 64-bit products.
__extension__ typedef __int128 Int128;

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q" exactly. Throws ErrorKind::Parse.
Rational parse_rational(std::string_view text);

/// Least non-negative residue of r modulo m (m > 0).
Rational mod(const Rational& r, const Rational& m);

bool is_prime(std::int64_t n);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace wittforge
