#include <doctest.h>

#include "cyint/hassewitt.hpp"

using namespace cyint;

namespace {

Family hexagon() {
  IntLaurent g(2);
  for (Exponent u : std::vector<Exponent>{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}) g.add(u, Integer(1));
  return build_family(FamilySpec::custom(g, {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}));
}

Family square() {
  IntLaurent g(2);
  for (int a : {-1, 1})
    for (int b : {-1, 1}) g.add({a, b}, Integer(1));
  return build_family(FamilySpec::custom(g, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
}

Family skewed_line() {
  IntLaurent g(1);
  g.add({1}, Integer(1));
  g.add({-1}, Integer(7));
  return build_family(FamilySpec::custom(g, {{1}, {-1}}));
}

}  // namespace

TEST_CASE("F^(1) is f^(p-1)") {
  Family s2 = build_family(FamilySpec::simplicial(2));
  const int p = 5;
  const std::size_t M = 9;
  SeriesLaurent F = hw_polynomial(s2, 1, p, M);
  SeriesLaurent f = s2.f(M), expect = SeriesLaurent::monomial({0, 0}, QSeries::constant(Rational(1), M));
  for (int i = 0; i < p - 1; ++i) expect = expect * f;
  REQUIRE(F.size() == expect.size());
  for (const auto& [u, c] : expect.terms()) CHECK(F.coefficient(u, QSeries(M, Rational(0))).agrees_with(c));
  CHECK(is_admissible(F, p, s2.polytope));
  CHECK(F.coefficient({0, 0}, QSeries(M, Rational(0)))[0] == 1);
  CHECK_THROWS(hw_polynomial(s2, p, p, M));
  CHECK_THROWS(hw_polynomial(s2, 0, p, M));
}

TEST_CASE("F^(2) against a direct expansion") {
  Family h2 = build_family(FamilySpec::hyperoctahedral(2));
  const int p = 5;
  const std::size_t M = 12;
  SeriesLaurent f = h2.f(M), fs = h2.f(M, p).frobenius_x(p);
  SeriesLaurent one = SeriesLaurent::monomial({0, 0}, QSeries::constant(Rational(1), M));
  SeriesLaurent fp = one;
  for (int i = 0; i < p; ++i) fp = fp * f;
  SeriesLaurent f3 = one;
  for (int i = 0; i < p - 2; ++i) f3 = f3 * f;
  SeriesLaurent expect = f3 * (fs + (fs - fp));
  SeriesLaurent F = hw_polynomial(h2, 2, p, M);
  CHECK(is_admissible(F, 2 * p, h2.polytope));
  for (const auto& [u, c] : expect.terms()) CHECK(F.coefficient(u, QSeries(M, Rational(0))).agrees_with(c));
  for (const auto& [u, c] : F.terms()) CHECK(expect.coefficient(u, QSeries(M, Rational(0))).agrees_with(c));
}

TEST_CASE("Hasse-Witt matrix structure") {
  for (int n = 2; n <= 3; ++n)
    for (int p : {5, 7}) {
      for (Family fam : {build_family(FamilySpec::simplicial(n)), build_family(FamilySpec::hyperoctahedral(n))}) {
        HWReport r = hw_matrix(fam, 1, p, 4);
        auto H0 = r.at_zero();
        CHECK(r.points.front() < r.points.back());
        std::size_t origin = 0;
        while (r.points[origin] != zero_exponent(n)) ++origin;
        CHECK(H0[origin][origin] == 1);
        for (std::size_t u = 0; u < r.size(); ++u)
          if (u != origin) CHECK(H0[u][origin] == 0);
        CHECK(r.det_at_0 == 1);
        CHECK(r.L_k == 0);
        CHECK(hw_determinant_series(r)[0] == 1);
      }
    }
}

TEST_CASE("L(k)") {
  Family s2 = build_family(FamilySpec::simplicial(2));
  CHECK(L_of_k(s2.polytope, 1) == 0);
  CHECK(L_of_k(s2.polytope, 2) == 6);
  std::vector<Family> fams{hexagon(), square(), skewed_line()};
  for (std::size_t n = 2; n <= 4; ++n) {
    fams.push_back(build_family(FamilySpec::simplicial(n)));
    fams.push_back(build_family(FamilySpec::hyperoctahedral(n)));
  }
  for (const auto& fam : fams)
    for (int k = 1; k <= 4; ++k) CHECK(L_of_k(fam.polytope, k) == L_of_k_by_counts(fam.polytope, k));
}

TEST_CASE("Hasse-Witt condition") {
  CHECK(hw_condition(build_family(FamilySpec::simplicial(2)), 2, 7, 10));
  CHECK(hw_condition(build_family(FamilySpec::hyperoctahedral(3)), 3, 7, 10));
  std::vector<HWReport> reports;
  CHECK_FALSE(hw_condition(skewed_line(), 1, 7, 10, &reports));
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].det_valuation_at_0 >= reports[0].L_k);
  CHECK(reports[0].det_valuation_at_0 > 0);
  // Custom families still satisfy the divisibility lower bound.
  for (const Family& fam : {hexagon(), square()})
    for (int k = 1; k <= 2; ++k) {
      HWReport r = hw_matrix(fam, k, 7, 3);
      if (r.det_at_0 != 0) CHECK(r.det_valuation_at_0 >= r.L_k);
    }
}

TEST_CASE("block factorization at t = 0") {
  Family s2 = build_family(FamilySpec::simplicial(2));
  HWBlockReport b = hw_block_check(s2, 2, 7);
  CHECK(b.ok);
  std::int64_t total = 0;
  for (const auto& blk : b.blocks) total += blk.valuation;
  CHECK(total == 6);
  CHECK(b.det_product == b.det_full);

  HWBlockReport b1 = hw_block_check(build_family(FamilySpec::hyperoctahedral(3)), 1, 7);
  CHECK(b1.ok);
  for (const auto& blk : b1.blocks) {
    if (blk.face.size() > 1) CHECK(blk.points.empty());
    else CHECK(blk.points.size() == 1);
  }
  HWBlockReport b2 = hw_block_check(build_family(FamilySpec::hyperoctahedral(3)), 2, 7);
  CHECK(b2.ok);
  for (const auto& blk : b2.blocks)
    if (blk.face.size() == 3) CHECK(blk.points.empty());
}
