#include "cyint/rational.hpp"

#include <stdexcept>

namespace cyint {

std::int64_t valuation(const Integer& x, std::int64_t p) {
  if (x == 0) return kInfiniteValuation;
  Integer prime = static_cast<long>(p);
  Integer rest = abs(x);
  std::int64_t v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
    ++v;
  }
  return v;
}

std::int64_t valuation(const Rational& x, std::int64_t p) {
  if (x == 0) return kInfiniteValuation;
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

Integer strip_prime(const Integer& x, std::int64_t p) {
  if (x == 0) throw std::invalid_argument("strip_prime: zero");
  Integer prime = static_cast<long>(p);
  Integer rest = x;
  while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
  }
  return rest;
}

Integer ipow(std::int64_t base, std::uint64_t exp) {
  Integer r;
  Integer b = static_cast<long>(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  auto check = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) throw std::invalid_argument("malformed rational: " + text);
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw std::invalid_argument("malformed rational: " + text);
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + text);
    }
  };
  std::string num = text.substr(0, slash);
  check(num, true);
  if (num[0] == '+') num.erase(0, 1);
  Rational r;
  if (slash == std::string::npos) {
    r = Rational(Integer(num));
  } else {
    std::string den = text.substr(slash + 1);
    check(den, false);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    r = Rational(Integer(num), d);
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int mobius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("mobius: n < 1");
  int sign = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace cyint
