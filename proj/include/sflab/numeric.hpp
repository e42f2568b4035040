#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace sflab {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);
BigInt pow(const BigInt& base, std::uint64_t exponent);
Rational pow(const Rational& base, std::int64_t exponent);

/// floor(log2(x)) for x >= 1.
std::uint32_t floor_log2(std::uint64_t x);
/// ceil(log2(x)) for x >= 1.
std::uint32_t ceil_log2(std::uint64_t x);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

} // namespace sflab
