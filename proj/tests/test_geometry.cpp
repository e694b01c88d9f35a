#include <doctest.h>

#include <algorithm>
#include <random>

#include "cyint/forms.hpp"

using namespace cyint;

namespace {

std::vector<Family> builtin_families() {
  std::vector<Family> out;
  for (std::size_t n = 2; n <= 4; ++n) {
    out.push_back(build_family(FamilySpec::simplicial(n)));
    out.push_back(build_family(FamilySpec::hyperoctahedral(n)));
  }
  return out;
}

Exponent random_vector(std::mt19937& rng, std::size_t n, int r) {
  std::uniform_int_distribution<int> d(-r, r);
  Exponent u(n);
  for (auto& x : u) x = d(rng);
  return u;
}

}  // namespace

TEST_CASE("family constructors") {
  Family s4 = build_family(FamilySpec::simplicial(4));
  CHECK(s4.polytope.vertices().size() == 5);
  CHECK(s4.polytope.facets().size() == 5);
  CHECK(std::find(s4.polytope.facets().begin(), s4.polytope.facets().end(), std::vector<int>{1, 1, 1, 1}) !=
        s4.polytope.facets().end());
  CHECK(s4.symmetry_order == 120);
  CHECK(s4.g.size() == 5);

  Family h2 = build_family(FamilySpec::hyperoctahedral(2));
  CHECK(h2.polytope.vertices().size() == 4);
  auto facets = h2.polytope.facets();
  std::sort(facets.begin(), facets.end());
  CHECK(facets == std::vector<std::vector<int>>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
  CHECK(h2.symmetry_order == 8);

  IntLaurent sq(2);
  for (int a : {-1, 1})
    for (int b : {-1, 1}) sq.add({a, b}, Integer(1));
  Family square = build_family(FamilySpec::custom(sq, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(square.polytope.facets().size() == 4);
  CHECK(square.polytope.vertices().size() == 4);

  // Missing facets, a non-integral facet, and an origin on the boundary are all rejected.
  IntLaurent tri(2);
  tri.add({1, 0}, Integer(1));
  tri.add({0, 1}, Integer(1));
  tri.add({-1, -1}, Integer(1));
  CHECK_THROWS_AS(build_family(FamilySpec::custom(tri, {{1, 1}})), PolytopeError);
  CHECK_NOTHROW(build_family(FamilySpec::custom(tri, {{1, 1}, {-2, 1}, {1, -2}})));
  IntLaurent big(2);
  big.add({2, 0}, Integer(1));
  big.add({0, 1}, Integer(1));
  big.add({-1, -1}, Integer(1));
  CHECK_THROWS_AS(build_family(FamilySpec::custom(big, {{1, 1}})), PolytopeError);
  IntLaurent half(2);
  half.add({1, 0}, Integer(1));
  half.add({0, 1}, Integer(1));
  half.add({0, 0}, Integer(1));
  CHECK_THROWS_AS(build_family(FamilySpec::custom(half, {{1, 1}})), PolytopeError);
  CHECK_THROWS(build_family(FamilySpec::simplicial(1)));
}

TEST_CASE("degree") {
  for (const auto& fam : builtin_families()) {
    const auto& P = fam.polytope;
    CHECK(P.degree(zero_exponent(P.dimension())) == 0);
    for (const auto& v : P.vertices()) CHECK(P.degree(v) == 1);
  }
  Family s4 = build_family(FamilySpec::simplicial(4));
  CHECK(s4.polytope.degree({1, 1, 1, 1}) == 4);
  CHECK(s4.polytope.degree({-1, 0, 0, 0}) == 4);
  // Homogeneous form (w_0, u + w_0) with min 0 has weight equal to the degree.
  std::mt19937 rng(3);
  for (int it = 0; it < 200; ++it) {
    Exponent u = random_vector(rng, 4, 5);
    int w0 = std::max(0, -*std::min_element(u.begin(), u.end()));
    int weight = w0;
    for (int x : u) weight += x + w0;
    CHECK(s4.polytope.degree(u) == weight);
  }
  Family h3 = build_family(FamilySpec::hyperoctahedral(3));
  CHECK(h3.polytope.degree({1, -2, 3}) == 6);
}

TEST_CASE("lattice points") {
  Family s2 = build_family(FamilySpec::simplicial(2));
  auto pts = s2.polytope.lattice_points(1);
  std::vector<Exponent> expect{{0, 0}, {1, 0}, {0, 1}, {-1, -1}};
  std::sort(expect.begin(), expect.end());
  CHECK(pts == expect);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(s2.polytope.lattice_points(2).size() == 10);
  CHECK(build_family(FamilySpec::hyperoctahedral(2)).polytope.lattice_points(1).size() == 5);
  for (const auto& fam : builtin_families()) {
    CHECK(fam.polytope.lattice_points(0) == std::vector<Exponent>{zero_exponent(fam.dimension())});
    // Reflexive: the origin is the only point of degree 0 in the polytope.
    for (const auto& u : fam.polytope.lattice_points(1))
      if (u != zero_exponent(fam.dimension())) CHECK(fam.polytope.degree(u) == 1);
  }
  // Cross-polytope point counts: sum_i 2^i C(n,i) C(k,i).
  Family h3 = build_family(FamilySpec::hyperoctahedral(3));
  CHECK(h3.polytope.lattice_points(2).size() == 25);
}

TEST_CASE("degree subadditivity and the cone criterion on random vectors") {
  std::mt19937 rng(11);
  for (const auto& fam : builtin_families()) {
    const auto& P = fam.polytope;
    for (int it = 0; it < 500; ++it) {
      Exponent a = random_vector(rng, P.dimension(), 6), b = random_vector(rng, P.dimension(), 6);
      CHECK(P.degree(a + b) <= P.degree(a) + P.degree(b));
      for (std::size_t f = 0; f < P.facets().size(); ++f)
        CHECK((P.functional(f, a) == P.degree(a)) == P.in_cone(a, P.facet_vertices()[f]));
    }
  }
}

TEST_CASE("faces") {
  Family s2 = build_family(FamilySpec::simplicial(2));
  CHECK(s2.polytope.faces().size() == 6);
  Family h3 = build_family(FamilySpec::hyperoctahedral(3));
  CHECK(h3.polytope.faces().size() == 6 + 12 + 8);
  CHECK(h3.polytope.minimal_face({1, 0, 0}).size() == 1);
  CHECK(h3.polytope.minimal_face({1, 1, 0}).size() == 2);
  CHECK(h3.polytope.minimal_face({2, -1, 1}).size() == 3);
  for (const auto& face : h3.polytope.faces()) CHECK(h3.polytope.face_lattice_points(face).size() == face.size());
}

TEST_CASE("admissibility") {
  Family s2 = build_family(FamilySpec::simplicial(2));
  CHECK(is_admissible(s2.f(6), 1, s2.polytope));
  SeriesLaurent x1 = SeriesLaurent::monomial({1, 0}, QSeries::constant(Rational(1), 6));
  CHECK_FALSE(is_admissible(x1, 1, s2.polytope));
  SeriesLaurent t2x1 = SeriesLaurent::monomial({1, 0}, QSeries::monomial(2, 6, Rational(0)));
  CHECK(is_admissible(t2x1, 1, s2.polytope));
  CHECK_FALSE(is_admissible(SeriesLaurent::monomial({2, 0}, QSeries::monomial(2, 6, Rational(0))), 1, s2.polytope));
  CHECK_FALSE(is_admissible(t2x1, 1, s2.polytope, 7));
}

TEST_CASE("constant term series") {
  Family s4 = build_family(FamilySpec::simplicial(4));
  QSeries c = constant_term_series(s4.g, s4.polytope, 16);
  CHECK(c[5] == 120);
  for (std::size_t m = 0; m < 16; ++m) {
    if (m % 5) CHECK(c[m] == 0);
    else {
      unsigned k = m / 5;
      Integer expect = factorial(5 * k) / ipow(Integer(factorial(k)).get_si(), 5);
      CHECK(c[m] == Rational(expect));
    }
  }
  Family h2 = build_family(FamilySpec::hyperoctahedral(2));
  QSeries d = constant_term_series(h2.g, h2.polytope, 13);
  QSeries d_unpruned = constant_term_series(h2.g, 13);
  CHECK(d[2] == 4);
  CHECK(d[4] == 36);
  for (std::size_t m = 0; m < 13; ++m) {
    CHECK(d[m] == d_unpruned[m]);
    if (m % 2) CHECK(d[m] == 0);
    else CHECK(d[m] == Rational(binomial(m, m / 2) * binomial(m, m / 2)));
  }
  IntLaurent cst = IntLaurent::monomial({0}, Integer(3));
  QSeries e = constant_term_series(cst, 6);
  for (std::size_t m = 0; m < 6; ++m) CHECK(e[m] == Rational(ipow(3, m)));
}

TEST_CASE("period map") {
  Family s4 = build_family(FamilySpec::simplicial(4));
  QSeries F0 = period_map(AdmissibleForm::inverse_f(4, 16), s4, 16);
  CHECK(F0.agrees_with(constant_term_series(s4.g, s4.polytope, 16)));
  CHECK(F0[10] == 113400);

  Family s2 = build_family(FamilySpec::simplicial(2));
  AdmissibleForm x1 = AdmissibleForm::monomial(2, 12, 2, {1, 0}, 1, Rational(1));
  CHECK(period_map(theta_i(x1, s2.g, 0), s2, 12).is_zero());
  CHECK(period_map(theta_i(AdmissibleForm::inverse_f(2, 12), s2.g, 1), s2, 12).is_zero());

  AdmissibleForm inv = AdmissibleForm::inverse_f(2, 12);
  CHECK(period_map(theta(inv, s2.g), s2, 12).agrees_with(theta(period_map(inv, s2, 12))));
  AdmissibleForm mixed = x1;
  mixed += AdmissibleForm::monomial(2, 12, 3, {-1, 1}, 3, Rational(5, 2));
  CHECK(period_map(theta(mixed, s2.g), s2, 12).agrees_with(theta(period_map(mixed, s2, 12))));

  // Frobenius-twisted denominator: c_0(1/f^sigma) = F_0(t^p).
  QSeries twisted = period_map(AdmissibleForm::inverse_f(2, 30, 7), s2, 30);
  CHECK(twisted.agrees_with(frobenius_substitute(constant_term_series(s2.g, s2.polytope, 30), 7)));
  Family h2 = build_family(FamilySpec::hyperoctahedral(2));
  QSeries h = period_map(AdmissibleForm::inverse_f(2, 12), h2, 12);
  CHECK(h.agrees_with(constant_term_series(h2.g, 12)));
}

TEST_CASE("Laurent polynomial operations") {
  QLaurent a(2);
  a.add({1, 2}, Rational(3));
  a.add({-1, 0}, Rational(1));
  a.add({1, 2}, Rational(-3));
  CHECK(a.size() == 1);
  QLaurent b = QLaurent::monomial({2, -1}, Rational(2));
  QLaurent ab = a * b;
  CHECK(ab.coefficient({1, -1}, Rational(0)) == 2);
  CHECK(ab.frobenius_x(3).cartier(3) == ab);
  CHECK(ab.cartier(2).empty());
  CHECK_THROWS(a.add({1}, Rational(1)));
}
