#include <doctest.h>

#include <random>

#include "cyint/crystal.hpp"

using namespace cyint;

namespace {

std::int64_t vp_factorial(std::size_t k, std::int64_t p) {
  std::int64_t v = 0;
  for (std::size_t j = 1; j <= k; ++j) v += valuation(Integer(static_cast<unsigned long>(j)), p);
  return v;
}

bool congruent(const QSeries& a, const QSeries& b, std::int64_t p, std::int64_t N, std::size_t M) {
  for (std::size_t j = 0; j < M; ++j) {
    Rational d = a[j] - b[j];
    if (d != 0 && valuation(d, p) < N) return false;
  }
  return true;
}

QSeries frobenius_F0(const Family& fam, std::size_t M) {
  return frobenius_basis(derive_picard_fuchs(fam, std::max<std::size_t>(M, 12)), M).F[0];
}

}  // namespace

TEST_CASE("Cartier term count") {
  for (std::int64_t p : {5, 7, 11, 13})
    for (std::size_t Nw = 2; Nw <= 8; ++Nw) {
      std::size_t K = cartier_terms(p, Nw);
      CHECK(static_cast<std::int64_t>(K) - vp_factorial(K, p) < static_cast<std::int64_t>(Nw));
      for (std::size_t k = K + 1; k < K + 60; ++k)
        CHECK(static_cast<std::int64_t>(k) - vp_factorial(k, p) >= static_cast<std::int64_t>(Nw));
    }
  CHECK(cartier_terms(7, 6) == 5);
  CHECK(cartier_terms(7, 7) == 7);
}

TEST_CASE("Cartier commutes with theta up to p") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(-9, 9), c(-20, 20), len(1, 12), dim(1, 4), prime(0, 2);
  const int primes[] = {3, 5, 7};
  for (int it = 0; it < 50; ++it) {
    std::size_t n = dim(rng);
    int p = primes[prime(rng)];
    QLaurent h(n);
    int terms = len(rng);
    for (int j = 0; j < terms; ++j) {
      Exponent u(n);
      for (auto& x : u) x = e(rng);
      if (j % 2 == 0)
        for (auto& x : u) x = p * (x / p);
      h.add(u, Rational(c(rng)));
    }
    for (std::size_t i = 0; i < n; ++i) CHECK(h.theta_i(i).cartier(p) == h.cartier(p).theta_i(i).scaled(Rational(p)));
  }
}

TEST_CASE("Cartier expansion") {
  Family s2 = build_family(FamilySpec::simplicial(2));
  CartierExpansion ce = cartier_expansion(s2, 7, 3, 10);
  CHECK(ce.prec.N_work == 5);
  CHECK(ce.prec.M_work == 12);
  CHECK(ce.Q.size() == ce.prec.K_max + 1);
  auto it = ce.Q[0].find({0, 0});
  REQUIRE(it != ce.Q[0].end());
  CHECK(it->second.a[0] == 1);
  CHECK_THROWS_AS(cartier_expansion(s2, 7, 3, 10, 2), std::invalid_argument);
  CHECK_THROWS_AS(cartier_expansion(s2, 2, 3, 10), std::invalid_argument);

  // The constant term survives the Cartier operator: c_0 of the expansion is F_0(t).
  for (const Family& fam : {s2, build_family(FamilySpec::hyperoctahedral(2))}) {
    for (std::int64_t p : {5, 7}) {
      CartierExpansion c = cartier_expansion(fam, p, 2, 8);
      AdmissibleForm w = c.to_form(fam.dimension());
      CHECK(w.admissible(fam.polytope));
      QSeries lhs = period_map(w, fam, c.prec.M_work);
      QSeries F0 = constant_term_series(fam.g, fam.polytope, c.prec.M_work);
      CHECK(congruent(lhs, F0, p, static_cast<std::int64_t>(c.prec.N_work), c.prec.M_work));
    }
  }
}

TEST_CASE("modular and rational reductions agree") {
  for (const Family& fam : {build_family(FamilySpec::simplicial(2)), build_family(FamilySpec::hyperoctahedral(2))}) {
    const std::int64_t p = 5;
    FrobeniusStructure fs = frobenius_structure(fam, p, 2, 8);
    CartierExpansion ce = cartier_expansion(fam, p, 2, 8);
    Reducer red(fam);
    ReducedVector v = red.reduce(ce.to_form(fam.dimension()));
    for (std::size_t i = 0; i < fam.dimension(); ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        Rational d = v.b[i][j] - fs.lambda[i][j].lift();
        CHECK((d == 0 || valuation(d, p) >= static_cast<std::int64_t>(2 + i)));
      }
  }
}

TEST_CASE("Frobenius structure") {
  struct Case {
    Family fam;
    std::int64_t p;
  };
  std::vector<Case> cases{{build_family(FamilySpec::simplicial(2)), 7},
                          {build_family(FamilySpec::simplicial(3)), 7},
                          {build_family(FamilySpec::hyperoctahedral(2)), 5},
                          {build_family(FamilySpec::hyperoctahedral(2)), 7}};
  for (const auto& c : cases) {
    const std::size_t N = 3, M = 10;
    FrobeniusStructure fs = frobenius_structure(c.fam, c.p, N, M);
    CHECK(fs.alpha[0].congruent(PadicScalar::from_rational(Rational(1), c.p, N)));
    CHECK(has_valuation_at_least(fs.alpha[1], static_cast<std::int64_t>(N)) == Verdict::kTrue);
    for (std::size_t i = 0; i < fs.lambda.size(); ++i)
      CHECK(fs.lambda_valuations[i] >= static_cast<std::int64_t>(i));
    QSeries F0 = frobenius_F0(c.fam, M);
    CHECK(verify_frobenius_equation(fs, F0, c.p, N, M));
    FrobeniusBasis basis = frobenius_basis(derive_picard_fuchs(c.fam, 12), M);
    ActionCheck ac = frobenius_action_check(fs, basis);
    CHECK(ac.ok);
    CHECK(ac.effective_precision >= 1);
  }
}

TEST_CASE("functional equation sensitivity") {
  Family s2 = build_family(FamilySpec::simplicial(2));
  const std::int64_t p = 7;
  FrobeniusStructure fs = frobenius_structure(s2, p, 3, 15);
  QSeries F0 = frobenius_F0(s2, 15);
  CHECK(verify_frobenius_equation(fs, F0, p, 3, 15));
  FrobeniusStructure bad = fs;
  bad.A[0][0] = bad.A[0][0] + PadicScalar::from_rational(Rational(49), p, 3);
  CHECK_FALSE(verify_frobenius_equation(bad, F0, p, 3, 15));
  CHECK_THROWS(verify_frobenius_equation(fs, F0, p, 4, 15));
}

TEST_CASE("hypotheses") {
  CHECK_THROWS_AS(frobenius_structure(build_family(FamilySpec::simplicial(2)), 3, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_structure(build_family(FamilySpec::hyperoctahedral(3)), 3, 2, 5), std::invalid_argument);
}
