#pragma once

// Exact rational helpers on top of GMP.

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace p1z {

using Rational = mpq_class;

// Parses "p/q" (optional sign on p, q > 0) or a bare integer into a
// canonical rational. Returns nullopt for anything else, including decimals.
std::optional<Rational> parse_rational(std::string_view text);

// Parses a finite decimal/scientific literal; throws DomainError otherwise.
double parse_real(std::string_view text);

// base^exponent for exponent >= 0.
Rational pow(const Rational& base, unsigned long exponent);
mpz_class pow(const mpz_class& base, unsigned long exponent);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace p1z
