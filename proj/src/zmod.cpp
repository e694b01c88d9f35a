#include "cyint/zmod.hpp"

#include <stdexcept>

namespace cyint {

PrimePowerModulus::PrimePowerModulus(std::int64_t prime, std::int64_t exponent) {
  if (prime < 2 || !is_prime(prime)) throw std::invalid_argument("modulus base must be prime");
  if (exponent < 1) throw std::invalid_argument("modulus exponent must be >= 1");
  Integer big = ipow(prime, static_cast<std::uint64_t>(exponent));
  if (big >= Integer(1UL << 32)) throw std::invalid_argument("p^e must be below 2^32");
  p = static_cast<std::uint32_t>(prime);
  e = static_cast<std::uint32_t>(exponent);
  m = big.get_ui();
}

std::uint64_t PrimePowerModulus::pow(std::uint64_t a, std::uint64_t k) const {
  std::uint64_t r = 1 % m;
  a %= m;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::uint64_t PrimePowerModulus::inv(std::uint64_t a) const {
  a %= m;
  if (a % p == 0) throw std::domain_error("residue is not a unit mod p^e");
  // Extended Euclid on signed 64-bit values.
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s0 < 0) s0 += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(s0);
}

std::uint64_t PrimePowerModulus::from_int(std::int64_t a) const {
  std::int64_t r = a % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimePowerModulus::from_integer(const Integer& a) const {
  return mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m));
}

std::uint64_t PrimePowerModulus::from_rational(const Rational& r) const {
  std::uint64_t den = from_integer(r.get_den());
  if (den % p == 0) throw std::domain_error("denominator divisible by p: " + r.get_str());
  return mul(from_integer(r.get_num()), inv(den));
}

std::int64_t ZmodPk::valuation() const {
  if (v_ == 0) return mod_.e;
  std::int64_t k = 0;
  std::uint64_t x = v_;
  while (x % mod_.p == 0) {
    x /= mod_.p;
    ++k;
  }
  return k;
}

ZmodPk ZmodPk::divide_by_prime_power(std::uint32_t k) const {
  if (k == 0) return *this;
  if (k >= mod_.e) throw std::domain_error("division exhausts the modulus");
  if (valuation() < k) throw std::domain_error("residue not divisible by p^k");
  PrimePowerModulus smaller(mod_.p, mod_.e - k);
  std::uint64_t d = 1;
  for (std::uint32_t i = 0; i < k; ++i) d *= mod_.p;
  return {smaller, v_ / d};
}

ZmodPk ZmodPk::reduce_to(std::uint32_t e) const {
  if (e > mod_.e) throw std::invalid_argument("cannot lift a residue to a larger modulus");
  PrimePowerModulus smaller(mod_.p, e);
  return {smaller, v_};
}

PadicScalar ZmodPk::to_padic() const {
  std::int64_t e = mod_.e;
  if (v_ == 0) return PadicScalar::exhausted(mod_.p, e, e);
  std::int64_t k = valuation();
  PadicScalar x = PadicScalar::from_rational(Rational(Integer(static_cast<unsigned long>(v_))), mod_.p, e);
  return x.with_precision(e - k);
}

std::string to_string(const ZmodPk& x) {
  return std::to_string(x.value()) + " (mod " + std::to_string(x.modulus().p) + "^" + std::to_string(x.modulus().e) + ")";
}

}  // namespace cyint
