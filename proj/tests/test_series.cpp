#include <doctest.h>

#include <random>

#include "cyint/log_series.hpp"
#include "cyint/series.hpp"

using namespace cyint;

namespace {

QSeries q(std::vector<long> c, std::size_t M) {
  std::vector<Rational> r;
  for (long x : c) r.emplace_back(x);
  return QSeries::from_rationals(r, M, Rational(0));
}

QSeries random_series(std::mt19937_64& rng, std::size_t M, bool zero_constant = false, bool unit_linear = false) {
  std::uniform_int_distribution<long> d(-9, 9);
  QSeries s(M, Rational(0));
  for (std::size_t i = 0; i < M; ++i) s[i] = d(rng);
  if (zero_constant) s[0] = 0;
  if (unit_linear && M > 1) s[1] = 1;
  return s;
}

// Lagrange inversion: [q^n] t(q) = (1/n) [t^{n-1}] (t/q(t))^n.
QSeries lagrange_reversion(const QSeries& qt) {
  std::size_t M = qt.order();
  QSeries out(M, Rational(0));
  if (M < 2) return out;
  QSeries ratio(M, Rational(0));
  for (std::size_t i = 0; i + 1 < M; ++i) ratio[i] = qt[i + 1];  // q(t)/t
  QSeries phi = ratio.inverse();
  QSeries power = QSeries::constant(Rational(1), M);
  for (std::size_t n = 1; n < M; ++n) {
    power = power * phi;
    out[n] = power[n - 1] / Rational(static_cast<long>(n));
  }
  return out;
}

Rational quintic_term(long k) { return Rational(factorial(5 * k) / (factorial(k) * factorial(k) * factorial(k) * factorial(k) * factorial(k))); }

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK((q({1, 1}, 5) * q({1, -1}, 5)).agrees_with(q({1, 0, -1}, 5)));
  QSeries geo = QSeries::constant(Rational(1), 6) / q({1, -1}, 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(geo[i] == 1);
  CHECK_THROWS_AS(QSeries::constant(Rational(1), 4) / q({0, 1}, 4), SeriesError);

  QSeries F0(3, Rational(0));
  for (long k = 0; k < 3; ++k) F0[k] = quintic_term(k);
  QSeries sq = F0 * F0;
  CHECK(sq[0] == 1);
  CHECK(sq[1] == 240);
  // 120^2 + 2 * 10!/(2!)^5
  CHECK(sq[2] == 120 * 120 + 2 * 113400);
  CHECK(sq[2] == 241200);
}

TEST_CASE("truncation is the minimum of the operands") {
  QSeries a = q({1, 2, 3}, 7), b = q({1, 1}, 4);
  CHECK((a * b).order() == 4);
  CHECK((a + b).order() == 4);
  CHECK_THROWS(a.truncate(8));
}

TEST_CASE("exp and log") {
  QSeries e = series_exp(QSeries(5, Rational(0)));
  CHECK(e.agrees_with(QSeries::constant(Rational(1), 5)));
  QSeries t = QSeries::monomial(1, 8, Rational(0));
  CHECK(series_log(series_exp(t)).agrees_with(t));
  QSeries g = t + QSeries::monomial(2, 8, Rational(0)) * Rational(1, 2);
  CHECK(series_exp(g)[2] == 1);
  CHECK(series_exp(t)[5] == Rational(1, 120));
  CHECK_THROWS_AS(series_exp(q({1, 1}, 3)), SeriesError);
  CHECK_THROWS_AS(series_log(q({2, 1}, 3)), SeriesError);
}

TEST_CASE("composition") {
  QSeries t2 = QSeries::monomial(2, 6, Rational(0));
  CHECK(compose(q({1, 1}, 6), t2).agrees_with(q({1, 0, 1}, 6)));
  QSeries id = QSeries::monomial(1, 6, Rational(0));
  QSeries x = q({0, 1, 3, -2, 5}, 6);
  CHECK(compose(id, x).agrees_with(x));
  QSeries geo = q({1, 1, 1}, 3);
  CHECK(compose(geo, q({0, 1, 1}, 3)).agrees_with(q({1, 1, 2}, 3)));
  CHECK_THROWS_AS(compose(geo, q({1, 1}, 3)), SeriesError);
}

TEST_CASE("reversion") {
  QSeries id = QSeries::monomial(1, 9, Rational(0));
  CHECK(reversion(id).agrees_with(id));
  QSeries r = reversion(q({0, 1, 1}, 7));
  CHECK(r.agrees_with(q({0, 1, -1, 2, -5, 14, -42}, 7)));
  CHECK(r.agrees_with(lagrange_reversion(q({0, 1, 1}, 7))));
  // Any invertible linear coefficient is accepted; zero is not.
  QSeries two = q({0, 2, 1}, 8);
  CHECK(compose(two, reversion(two)).agrees_with(QSeries::monomial(1, 8, Rational(0))));
  CHECK(reversion(two).agrees_with(lagrange_reversion(two)));
  CHECK_THROWS_AS(reversion(q({0, 0, 1}, 4)), SeriesError);
  CHECK_THROWS_AS(reversion(q({1, 1}, 4)), SeriesError);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries s = random_series(rng, 12, true, true);
    QSeries inv = reversion(s);
    CHECK(compose(s, inv).agrees_with(QSeries::monomial(1, 12, Rational(0))));
    CHECK(inv.agrees_with(lagrange_reversion(s)));
  }
}

TEST_CASE("theta") {
  CHECK(theta(QSeries::monomial(3, 5, Rational(0))).agrees_with(q({0, 0, 0, 3}, 5)));
  CHECK(theta(QSeries::constant(Rational(1), 5)).is_zero());
  QLogSeries y({QSeries(5, Rational(0)), QSeries::monomial(1, 5, Rational(0))});  // t log t
  QLogSeries ty = theta(y);
  REQUIRE(ty.log_degree() == 1);
  CHECK(ty.part(1).agrees_with(QSeries::monomial(1, 5, Rational(0))));
  CHECK(ty.part(0).agrees_with(QSeries::monomial(1, 5, Rational(0))));
}

TEST_CASE("frobenius substitution") {
  const std::size_t p = 5;
  QSeries s = frobenius_substitute(q({1, 1}, 12), p);
  CHECK(s.agrees_with(q({1, 0, 0, 0, 0, 1}, 12)));
  QLogSeries l = frobenius_substitute(QLogSeries::log_t(6, Rational(0)), p);
  CHECK(l.part(1)[0] == 5);
  CHECK(l.part(0).is_zero());

  QSeries F0 = q({1, 2, 3, 4}, 12), F1 = q({0, 7, 1}, 12);
  QLogSeries y1({F1, F0});
  QLogSeries sy = frobenius_substitute(y1, p);
  CHECK(sy.part(1).agrees_with(frobenius_substitute(F0, p) * Rational(5)));
  CHECK(sy.part(0).agrees_with(frobenius_substitute(F1, p)));
}

TEST_CASE("property suite: series laws on 200 random cases") {
  std::mt19937_64 rng(424242);
  const std::size_t M = 10;
  for (int trial = 0; trial < 200; ++trial) {
    QSeries a = random_series(rng, M), b = random_series(rng, M), c = random_series(rng, M);
    CHECK(((a * b) * c).agrees_with(a * (b * c)));
    CHECK((a * (b + c)).agrees_with(a * b + a * c));
    CHECK((a * b).agrees_with(b * a));
    CHECK(theta(a * b).agrees_with(theta(a) * b + a * theta(b)));
    CHECK(frobenius_substitute(a * b, 3).agrees_with(frobenius_substitute(a, 3) * frobenius_substitute(b, 3)));
    CHECK(theta(frobenius_substitute(a, 3)).agrees_with(frobenius_substitute(theta(a), 3) * Rational(3)));
    if (a[0] != 0) CHECK(((b / a) * a).agrees_with(b));
    QSeries u = random_series(rng, M, true, true);
    QSeries v = reversion(u);
    CHECK(compose(u, v).agrees_with(QSeries::monomial(1, M, Rational(0))));
    CHECK(compose(v, u).agrees_with(QSeries::monomial(1, M, Rational(0))));
    QSeries z = random_series(rng, M, true);
    CHECK(series_log(series_exp(z)).agrees_with(z));
    CHECK(series_exp(z + u).agrees_with(series_exp(z) * series_exp(u)));
  }
}

TEST_CASE("log series product rule") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    QLogSeries a({random_series(rng, 8), random_series(rng, 8)});
    QLogSeries b({random_series(rng, 8), random_series(rng, 8), random_series(rng, 8)});
    QLogSeries lhs = theta(a * b);
    QLogSeries rhs = theta(a) * b + a * theta(b);
    REQUIRE(lhs.log_degree() == rhs.log_degree());
    for (std::size_t j = 0; j <= lhs.log_degree(); ++j) CHECK(lhs.part(j).agrees_with(rhs.part(j)));
  }
}

TEST_CASE("p-adic coefficients track loss from integer division") {
  PSeries t = to_padic(QSeries::monomial(1, 9, Rational(0)), 7, 5);
  PSeries e = series_exp(t);
  CHECK(e[7].valuation() == -1);
  CHECK(e[7].precision() == 5);
  CHECK(e[3].congruent(padic_of_rational(Rational(1, 6), 7, 5)));
}
