#include "p1z/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "p1z/errors.hpp"

namespace p1z {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t k = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) k = 1;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) return std::nullopt;
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rational(mpz_class(num_str));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den, false)) return std::nullopt;
  const mpz_class d{std::string(den)};
  if (d == 0) return std::nullopt;
  Rational q(mpz_class(num_str), d);
  q.canonicalize();
  return q;
}

double parse_real(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw DomainError("not a finite real number: '" + std::string(text) + "'");
  }
  return value;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

mpz_class pow(const mpz_class& base, unsigned long exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

}  // namespace p1z
