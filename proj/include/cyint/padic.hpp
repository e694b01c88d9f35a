#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cyint/rational.hpp"

namespace cyint {

/// Raised for p-adic division by a value with no known unit part.
class PadicError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Outcome of a check that may be undecidable at finite precision.
enum class Verdict { kFalse = 0, kTrue = 1, kInconclusive = 2 };

const char* to_string(Verdict v);

/// Element of Q_p stored as p^valuation * unit, unit known mod p^precision.
///
/// Three shapes exist: exact zero (valuation infinite; precision kept only so
/// the value can serve as a ring prototype), an exhausted zero which is known
/// only to lie in p^a Z_p, and a regular value with a nonzero unit.
class PadicScalar {
 public:
  PadicScalar() = default;

  static PadicScalar from_rational(const Rational& r, std::int64_t p, std::int64_t precision);
  static PadicScalar zero(std::int64_t p, std::int64_t precision);
  /// Value known only to be divisible by p^absolute_precision.
  static PadicScalar exhausted(std::int64_t p, std::int64_t absolute_precision, std::int64_t precision);

  std::int64_t prime() const { return p_; }
  /// Relative precision N (for zeros, the nominal precision).
  std::int64_t precision() const { return prec_; }
  /// Valuation; kInfiniteValuation for exact zero, and the known lower bound for an exhausted zero.
  std::int64_t valuation() const { return val_; }
  const Integer& unit() const { return unit_; }
  /// valuation + precision; kInfiniteValuation for exact zero.
  std::int64_t absolute_precision() const;

  bool is_exact_zero() const { return kind_ == Kind::kExactZero; }
  bool is_exhausted() const { return kind_ == Kind::kExhausted; }
  bool is_regular() const { return kind_ == Kind::kRegular; }
  /// Either kind of zero.
  bool is_zero() const { return kind_ != Kind::kRegular; }

  /// True iff x is known to be divisible by p^k.
  bool known_divisible(std::int64_t k) const;

  /// Integral representative p^v * unit as a rational (zero for zeros).
  Rational lift() const;

  /// Drops relative precision to at most n.
  PadicScalar with_precision(std::int64_t n) const;

  PadicScalar operator-() const;
  friend PadicScalar operator+(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator-(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator*(const PadicScalar& x, const PadicScalar& y);
  /// Throws PadicError when y is any kind of zero.
  friend PadicScalar operator/(const PadicScalar& x, const PadicScalar& y);

  PadicScalar& operator+=(const PadicScalar& y) { return *this = *this + y; }
  PadicScalar& operator-=(const PadicScalar& y) { return *this = *this - y; }
  PadicScalar& operator*=(const PadicScalar& y) { return *this = *this * y; }
  PadicScalar& operator/=(const PadicScalar& y) { return *this = *this / y; }

  /// Congruence at the smaller of the two absolute precisions.
  bool congruent(const PadicScalar& y) const;

  std::string str() const;

 private:
  enum class Kind { kExactZero, kExhausted, kRegular };

  static PadicScalar normalize(std::int64_t p, std::int64_t v, Integer residue, std::int64_t abs_prec,
                               std::int64_t nominal);

  std::int64_t p_ = 3;
  std::int64_t val_ = kInfiniteValuation;
  Integer unit_ = 0;
  std::int64_t prec_ = 1;
  Kind kind_ = Kind::kExactZero;
};

inline PadicScalar padic_of_rational(const Rational& r, std::int64_t p, std::int64_t precision) {
  return PadicScalar::from_rational(r, p, precision);
}

/// true iff valuation >= 0; exhausted values are inconclusive.
Verdict is_p_integral(const PadicScalar& x);

/// v_p(x) >= k, decided when possible.
Verdict has_valuation_at_least(const PadicScalar& x, std::int64_t k);

// Hooks for generic coefficient code.
inline PadicScalar embed(const PadicScalar& like, const Rational& r) {
  return PadicScalar::from_rational(r, like.prime(), like.precision());
}
inline bool is_zero(const PadicScalar& x) { return x.is_exact_zero(); }
inline bool is_invertible(const PadicScalar& x) { return x.is_regular(); }
inline std::string to_string(const PadicScalar& x) { return x.str(); }

}  // namespace cyint
