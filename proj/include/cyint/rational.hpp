#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

namespace cyint {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sentinel valuation for exact zero.
inline constexpr std::int64_t kInfiniteValuation = std::numeric_limits<std::int64_t>::max();

/// p-adic valuation of a nonzero integer; kInfiniteValuation for 0.
std::int64_t valuation(const Integer& x, std::int64_t p);

/// v_p(num) - v_p(den); kInfiniteValuation for 0.
std::int64_t valuation(const Rational& x, std::int64_t p);

/// Removes all factors of p from |x| (sign preserved). x must be nonzero.
Integer strip_prime(const Integer& x, std::int64_t p);

Integer ipow(std::int64_t base, std::uint64_t exp);

/// Parses "a", "-a", "a/b"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

bool is_prime(std::int64_t n);

/// Moebius function.
int mobius(std::int64_t n);

}  // namespace cyint
