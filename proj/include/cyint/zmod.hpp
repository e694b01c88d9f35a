#pragma once

#include <cstdint>
#include <string>

#include "cyint/padic.hpp"
#include "cyint/rational.hpp"

namespace cyint {

/// The ring Z/p^e with p^e < 2^32, so products fit in 64 bits.
struct PrimePowerModulus {
  std::uint32_t p = 3;
  std::uint32_t e = 1;
  std::uint64_t m = 3;

  PrimePowerModulus() = default;
  PrimePowerModulus(std::int64_t prime, std::int64_t exponent);

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + m - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % m; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : m - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const;
  /// Inverse of a unit; throws std::domain_error if p | a.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t from_int(std::int64_t a) const;
  std::uint64_t from_integer(const Integer& a) const;
  /// Requires the denominator prime to p.
  std::uint64_t from_rational(const Rational& r) const;

  bool operator==(const PrimePowerModulus& o) const { return p == o.p && e == o.e; }
};

/// A residue together with its modulus; coefficient type for Cartier work.
class ZmodPk {
 public:
  ZmodPk() = default;
  ZmodPk(const PrimePowerModulus& mod, std::uint64_t v) : mod_(mod), v_(v % mod.m) {}

  const PrimePowerModulus& modulus() const { return mod_; }
  std::uint64_t value() const { return v_; }

  ZmodPk operator-() const { return {mod_, mod_.neg(v_)}; }
  friend ZmodPk operator+(const ZmodPk& a, const ZmodPk& b) { return {a.mod_, a.mod_.add(a.v_, b.v_)}; }
  friend ZmodPk operator-(const ZmodPk& a, const ZmodPk& b) { return {a.mod_, a.mod_.sub(a.v_, b.v_)}; }
  friend ZmodPk operator*(const ZmodPk& a, const ZmodPk& b) { return {a.mod_, a.mod_.mul(a.v_, b.v_)}; }
  /// Division by a unit residue.
  friend ZmodPk operator/(const ZmodPk& a, const ZmodPk& b) { return {a.mod_, a.mod_.mul(a.v_, a.mod_.inv(b.v_))}; }
  ZmodPk& operator+=(const ZmodPk& b) { return *this = *this + b; }
  ZmodPk& operator-=(const ZmodPk& b) { return *this = *this - b; }
  ZmodPk& operator*=(const ZmodPk& b) { return *this = *this * b; }
  ZmodPk& operator/=(const ZmodPk& b) { return *this = *this / b; }
  friend bool operator==(const ZmodPk& a, const ZmodPk& b) { return a.v_ == b.v_; }

  /// p-adic valuation of the residue, capped at e.
  std::int64_t valuation() const;

  /// Exact division by p^k; the result lives mod p^(e-k). Requires p^k | value.
  ZmodPk divide_by_prime_power(std::uint32_t k) const;
  /// Image modulo p^e' for e' <= e.
  ZmodPk reduce_to(std::uint32_t e) const;

  /// The residue as a p-adic number with absolute precision e.
  PadicScalar to_padic() const;

 private:
  PrimePowerModulus mod_;
  std::uint64_t v_ = 0;
};

inline ZmodPk embed(const ZmodPk& like, const Rational& r) { return {like.modulus(), like.modulus().from_rational(r)}; }
inline bool is_zero(const ZmodPk& x) { return x.value() == 0; }
inline bool is_invertible(const ZmodPk& x) { return x.value() % x.modulus().p != 0; }
std::string to_string(const ZmodPk& x);

}  // namespace cyint
