#include <doctest.h>

#include <random>

#include "cyint/padic.hpp"
#include "cyint/zmod.hpp"

using namespace cyint;

TEST_CASE("rational embedding") {
  PadicScalar x = padic_of_rational(Rational(49, 3), 7, 3);
  CHECK(x.valuation() == 2);
  CHECK(x.unit() * 3 % 343 == 1);
  CHECK(x.precision() == 3);

  PadicScalar z = padic_of_rational(0, 7, 3);
  CHECK(z.is_exact_zero());
  CHECK(z.valuation() == kInfiniteValuation);
  CHECK(z.str() == "0 (mod 7^3)");

  PadicScalar one = padic_of_rational(1, 5, 4);
  CHECK(one.valuation() == 0);
  CHECK(one.unit() == 1);

  PadicScalar neg = padic_of_rational(Rational(2, 49), 7, 2);
  CHECK(neg.valuation() == -2);
  CHECK(is_p_integral(neg) == Verdict::kFalse);
}

TEST_CASE("arithmetic examples") {
  PadicScalar seven = padic_of_rational(7, 7, 4);
  PadicScalar s = seven + seven;
  CHECK(s.valuation() == 1);
  CHECK(s.unit() == 2);

  PadicScalar prod = padic_of_rational(Rational(1, 7), 7, 4) * seven;
  CHECK(prod.valuation() == 0);
  CHECK(prod.unit() == 1);

  // (1 + 5^2) - 1 with N = 2: the difference vanishes at the available precision.
  PadicScalar a = padic_of_rational(26, 5, 2);
  PadicScalar b = padic_of_rational(1, 5, 2);
  PadicScalar d = a - b;
  CHECK(d.is_exhausted());
  CHECK_FALSE(d.is_exact_zero());
  CHECK(d.absolute_precision() == 2);
  CHECK(is_p_integral(d) == Verdict::kInconclusive);
  CHECK(has_valuation_at_least(d, 2) == Verdict::kTrue);
  CHECK(has_valuation_at_least(d, 3) == Verdict::kInconclusive);
  CHECK_THROWS_AS(b / d, PadicError);
  CHECK_THROWS_AS(b / padic_of_rational(0, 5, 2), PadicError);
}

TEST_CASE("integrality verdicts") {
  CHECK(is_p_integral(padic_of_rational(49, 7, 3)) == Verdict::kTrue);
  CHECK(is_p_integral(padic_of_rational(Rational(1, 7), 7, 3)) == Verdict::kFalse);
  CHECK(is_p_integral(padic_of_rational(0, 7, 3)) == Verdict::kTrue);
}

TEST_CASE("rendering") {
  CHECK(padic_of_rational(Rational(98), 7, 3).str() == "7^2 * 2 (mod 7^5)");
}

TEST_CASE("additive precision is the absolute-precision intersection") {
  PadicScalar x = padic_of_rational(1, 7, 5);           // known mod 7^5
  PadicScalar y = padic_of_rational(Rational(1, 7), 7, 2);  // known mod 7^1
  PadicScalar s = x + y;
  CHECK(s.valuation() == -1);
  CHECK(s.absolute_precision() == 1);
  CHECK(s.precision() == 2);
}

namespace {

Rational random_rational(std::mt19937_64& rng, std::int64_t p) {
  std::uniform_int_distribution<long> num(-2000, 2000), den(1, 300), vexp(-2, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  long e = vexp(rng);
  if (e > 0) r *= Rational(ipow(p, e));
  if (e < 0) r /= Rational(ipow(p, -e));
  return r;
}

}  // namespace

TEST_CASE("ring laws and multiplicativity on random rationals") {
  std::mt19937_64 rng(20240611);
  const std::int64_t p = 7, N = 6;
  for (int trial = 0; trial < 300; ++trial) {
    Rational r = random_rational(rng, p), s = random_rational(rng, p), u = random_rational(rng, p);
    PadicScalar x = padic_of_rational(r, p, N), y = padic_of_rational(s, p, N), z = padic_of_rational(u, p, N);
    PadicScalar lhs = (x + y) + z, rhs = x + (y + z);
    if (!lhs.is_exhausted() && !rhs.is_exhausted()) CHECK(lhs.congruent(rhs));
    PadicScalar d1 = x * (y + z), d2 = x * y + x * z;
    if (!d1.is_exhausted() && !d2.is_exhausted()) CHECK(d1.congruent(d2));
    if (r != 0 && s != 0) {
      PadicScalar prod = padic_of_rational(r * s, p, N);
      PadicScalar xy = x * y;
      CHECK(xy.valuation() == x.valuation() + y.valuation());
      CHECK(xy.valuation() == prod.valuation());
      CHECK(xy.unit() == prod.unit());
      CHECK(((x * y) / y).congruent(x));
    }
    // The sum agrees with the exact sum to the tracked absolute precision.
    PadicScalar sum = x + y;
    PadicScalar exact = padic_of_rational(r + s, p, N + 10);
    if (sum.is_regular()) {
      CHECK(sum.valuation() == exact.valuation());
      CHECK(sum.congruent(exact));
    } else if (sum.is_exhausted()) {
      CHECK(exact.known_divisible(sum.absolute_precision()));
    }
  }
}

TEST_CASE("lift is an integral representative") {
  PadicScalar x = padic_of_rational(Rational(-5, 3), 7, 4);
  Rational l = x.lift();
  CHECK(l.get_den() == 1);
  CHECK(padic_of_rational(l, 7, 4).congruent(x));
}

TEST_CASE("ZmodPk basics") {
  PrimePowerModulus mod(7, 4);
  CHECK(mod.m == 2401);
  ZmodPk a(mod, mod.from_rational(Rational(1, 3)));
  CHECK((a * ZmodPk(mod, 3)).value() == 1);
  CHECK_THROWS(mod.from_rational(Rational(1, 7)));
  ZmodPk b(mod, 49 * 5);
  CHECK(b.valuation() == 2);
  ZmodPk c = b.divide_by_prime_power(2);
  CHECK(c.value() == 5);
  CHECK(c.modulus().e == 2);
  PadicScalar pc = b.to_padic();
  CHECK(pc.valuation() == 2);
  CHECK(pc.absolute_precision() == 4);
  CHECK(ZmodPk(mod, 0).to_padic().is_exhausted());
  CHECK_THROWS(PrimePowerModulus(7, 20));
}
