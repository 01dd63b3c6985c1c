#pragma once

#include <gmpxx.h>

#include <string>

namespace ffm {

/// Unbounded integer and reduced rational (denominator > 0).
using BigInt = mpz_class;
using BigRational = mpq_class;

/// num / den in lowest terms; throws std::domain_error when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& r);
std::string to_string(const BigInt& z);
/// Parses "p/q" or "p"; throws std::invalid_argument.
BigRational parse_rational(const std::string& text);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const BigRational& r, int significant_digits = 15);

/// n! and C(n, k) (zero outside 0 <= k <= n), memoized; thread-safe.
const BigInt& factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

BigRational pow(const BigRational& base, unsigned e);
BigInt pow(const BigInt& base, unsigned e);

}  // namespace ffm
