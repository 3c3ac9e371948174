#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace transportlab {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact rational, kept in lowest terms with a positive denominator.
/// Every value built through `make_rational` or `parse_rational` is
/// canonical; mpq arithmetic preserves that.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den = 1);

/// Accepts "7", "-3", "5/2", "  -10/4 " (reduced to -5/2).
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

bool is_integer(const Rational& value);
BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

/// Least common multiple of all denominators (1 for an empty list).
BigInt denominator_lcm(const std::vector<Rational>& values);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

/// Narrowing with a range check; throws InvalidInput when out of range.
std::int64_t to_int64(const BigInt& value);
std::int64_t to_int64(const Rational& value);

Rational sum(const std::vector<Rational>& values);

}  // namespace transportlab
