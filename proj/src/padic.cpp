#include "cyint/padic.hpp"

#include <algorithm>
#include <sstream>

namespace cyint {

namespace {

void require_compatible(const PadicScalar& x, const PadicScalar& y) {
  if (x.prime() != y.prime()) throw PadicError("p-adic operands over different primes");
}

Integer mod_pow(std::int64_t p, std::int64_t e) { return ipow(p, static_cast<std::uint64_t>(std::max<std::int64_t>(e, 0))); }

Integer reduce(const Integer& x, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

PadicScalar PadicScalar::zero(std::int64_t p, std::int64_t precision) {
  if (precision < 1) throw std::invalid_argument("p-adic precision must be >= 1");
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  PadicScalar z;
  z.p_ = p;
  z.prec_ = precision;
  return z;
}

PadicScalar PadicScalar::exhausted(std::int64_t p, std::int64_t absolute_precision, std::int64_t precision) {
  PadicScalar z = zero(p, precision);
  z.kind_ = Kind::kExhausted;
  z.val_ = absolute_precision;
  return z;
}

PadicScalar PadicScalar::from_rational(const Rational& r, std::int64_t p, std::int64_t precision) {
  PadicScalar x = zero(p, precision);
  if (r == 0) return x;
  Integer num = strip_prime(r.get_num(), p);
  Integer den = strip_prime(r.get_den(), p);
  x.val_ = cyint::valuation(r, p);
  Integer m = mod_pow(p, precision);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  x.unit_ = reduce(num * inv, m);
  x.kind_ = Kind::kRegular;
  return x;
}

std::int64_t PadicScalar::absolute_precision() const {
  switch (kind_) {
    case Kind::kExactZero: return kInfiniteValuation;
    case Kind::kExhausted: return val_;
    case Kind::kRegular: return val_ + prec_;
  }
  return kInfiniteValuation;
}

bool PadicScalar::known_divisible(std::int64_t k) const {
  if (kind_ == Kind::kExactZero) return true;
  return val_ >= k;
}

Rational PadicScalar::lift() const {
  if (kind_ != Kind::kRegular) return 0;
  if (val_ >= 0) return Rational(unit_ * ipow(p_, static_cast<std::uint64_t>(val_)));
  Rational r(unit_, ipow(p_, static_cast<std::uint64_t>(-val_)));
  r.canonicalize();
  return r;
}

PadicScalar PadicScalar::with_precision(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("p-adic precision must be >= 1");
  PadicScalar r = *this;
  if (n >= prec_) return r;
  r.prec_ = n;
  if (kind_ == Kind::kRegular) r.unit_ = reduce(unit_, mod_pow(p_, n));
  return r;
}

PadicScalar PadicScalar::normalize(std::int64_t p, std::int64_t v, Integer residue, std::int64_t abs_prec,
                                   std::int64_t nominal) {
  // residue represents p^v * residue mod p^abs_prec.
  std::int64_t room = abs_prec - v;
  if (room <= 0) return exhausted(p, abs_prec, nominal);
  residue = reduce(residue, mod_pow(p, room));
  if (residue == 0) return exhausted(p, abs_prec, nominal);
  std::int64_t w = cyint::valuation(residue, p);
  PadicScalar out = zero(p, nominal);
  out.kind_ = Kind::kRegular;
  out.val_ = v + w;
  out.prec_ = room - w;
  out.unit_ = residue / ipow(p, static_cast<std::uint64_t>(w));
  return out;
}

PadicScalar PadicScalar::operator-() const {
  PadicScalar r = *this;
  if (kind_ == Kind::kRegular) r.unit_ = reduce(-unit_, mod_pow(p_, prec_));
  return r;
}

PadicScalar operator+(const PadicScalar& x, const PadicScalar& y) {
  require_compatible(x, y);
  if (x.is_exact_zero()) return y;
  if (y.is_exact_zero()) return x;
  std::int64_t nominal = std::max(x.prec_, y.prec_);
  std::int64_t a = std::min(x.absolute_precision(), y.absolute_precision());
  if (x.is_exhausted() && y.is_exhausted()) return PadicScalar::exhausted(x.p_, a, nominal);
  if (x.is_exhausted()) return PadicScalar::normalize(y.p_, y.val_, y.unit_, a, nominal);
  if (y.is_exhausted()) return PadicScalar::normalize(x.p_, x.val_, x.unit_, a, nominal);
  std::int64_t v = std::min(x.val_, y.val_);
  Integer s = x.unit_ * ipow(x.p_, static_cast<std::uint64_t>(x.val_ - v)) +
              y.unit_ * ipow(y.p_, static_cast<std::uint64_t>(y.val_ - v));
  return PadicScalar::normalize(x.p_, v, s, a, nominal);
}

PadicScalar operator-(const PadicScalar& x, const PadicScalar& y) { return x + (-y); }

PadicScalar operator*(const PadicScalar& x, const PadicScalar& y) {
  require_compatible(x, y);
  std::int64_t nominal = std::max(x.prec_, y.prec_);
  if (x.is_exact_zero() || y.is_exact_zero()) return PadicScalar::zero(x.p_, nominal);
  if (x.is_exhausted() && y.is_exhausted()) return PadicScalar::exhausted(x.p_, x.val_ + y.val_, nominal);
  if (x.is_exhausted()) return PadicScalar::exhausted(x.p_, x.val_ + y.val_, nominal);
  if (y.is_exhausted()) return PadicScalar::exhausted(x.p_, x.val_ + y.val_, nominal);
  PadicScalar r = PadicScalar::zero(x.p_, std::min(x.prec_, y.prec_));
  r.kind_ = PadicScalar::Kind::kRegular;
  r.val_ = x.val_ + y.val_;
  r.unit_ = reduce(x.unit_ * y.unit_, mod_pow(x.p_, r.prec_));
  return r;
}

PadicScalar operator/(const PadicScalar& x, const PadicScalar& y) {
  require_compatible(x, y);
  if (y.is_exact_zero()) throw PadicError("p-adic division by exact zero");
  if (y.is_exhausted()) throw PadicError("p-adic division by a value exhausted to zero");
  if (x.is_exact_zero()) return x;
  if (x.is_exhausted()) return PadicScalar::exhausted(x.p_, x.val_ - y.val_, x.prec_);
  PadicScalar r = PadicScalar::zero(x.p_, std::min(x.prec_, y.prec_));
  Integer m = mod_pow(x.p_, r.prec_);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), y.unit_.get_mpz_t(), m.get_mpz_t());
  r.kind_ = PadicScalar::Kind::kRegular;
  r.val_ = x.val_ - y.val_;
  r.unit_ = reduce(x.unit_ * inv, m);
  return r;
}

bool PadicScalar::congruent(const PadicScalar& y) const {
  PadicScalar d = *this - y;
  return d.is_zero();
}

std::string PadicScalar::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kExactZero:
      os << "0 (mod " << p_ << "^" << prec_ << ")";
      break;
    case Kind::kExhausted:
      os << "0 (mod " << p_ << "^" << val_ << ", precision exhausted)";
      break;
    case Kind::kRegular:
      os << p_ << "^" << val_ << " * " << unit_.get_str() << " (mod " << p_ << "^" << (val_ + prec_) << ")";
      break;
  }
  return os.str();
}

Verdict is_p_integral(const PadicScalar& x) {
  if (x.is_exact_zero()) return Verdict::kTrue;
  if (x.is_exhausted()) return Verdict::kInconclusive;
  return x.valuation() >= 0 ? Verdict::kTrue : Verdict::kFalse;
}

Verdict has_valuation_at_least(const PadicScalar& x, std::int64_t k) {
  if (x.is_exact_zero()) return Verdict::kTrue;
  if (x.is_exhausted()) return x.valuation() >= k ? Verdict::kTrue : Verdict::kInconclusive;
  return x.valuation() >= k ? Verdict::kTrue : Verdict::kFalse;
}

}  // namespace cyint
