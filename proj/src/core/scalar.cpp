#include "transportlab/core/scalar.hpp"

#include <cctype>
#include <limits>

#include "transportlab/core/error.hpp"

namespace transportlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt parse_bigint(std::string_view text) {
  auto s = trim(text);
  if (!is_integer_literal(s)) fail(ErrorKind::InvalidInput, "not an integer: '" + std::string(text) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(s));
  auto den = parse_bigint(s.substr(slash + 1));
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_bigint(s.substr(0, slash)), den);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

BigInt floor(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt ceil(const Rational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt denominator_lcm(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) fail(ErrorKind::InvalidInput, "integer out of range: " + to_string(value));
  return value.get_si();
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) fail(ErrorKind::InvalidInput, "expected an integer, got " + to_string(value));
  return to_int64(BigInt(value.get_num()));
}

Rational sum(const std::vector<Rational>& values) {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

}  // namespace transportlab
