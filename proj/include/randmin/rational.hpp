#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace randmin {

using BigInt = mpz_class;

/// Exact rational in lowest terms with a positive denominator.
///
/// GMP's mpq_class keeps every arithmetic result canonical; values built
/// from a raw numerator/denominator pair must go through make_rational().
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(std::int64_t num, std::int64_t den);

BigInt big_pow(std::uint64_t base, std::uint64_t exp);

/// Exact integer if the rational has denominator 1; throws std::logic_error otherwise.
BigInt require_integral(const BigRational& q, const char* what);

double to_double(const BigRational& q);

/// Natural log of |q| without overflowing double for huge numerators or denominators.
double log_abs(const BigRational& q);
double log_abs(const BigInt& z);

/// "num/den" (or just "num" when den == 1).
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

}  // namespace randmin
