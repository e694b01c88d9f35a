#include "cyint/mirror.hpp"

#include <stdexcept>

namespace cyint {

namespace {

void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

bool p_integral(const Rational& x, std::int64_t p) { return x == 0 || valuation(x, p) >= 0; }

}  // namespace

QSeries canonical_coordinate(const QSeries& F0, const QSeries& F1) {
  if (F0.order() == 0 || F0[0] != 1) throw SeriesError("canonical coordinate needs F_0(0) = 1");
  if (F1.order() > 0 && F1[0] != 0) throw SeriesError("canonical coordinate needs F_1(0) = 0");
  return series_exp(F1 / F0).shift(1);
}

YukawaCoupling yukawa(const FrobeniusBasis& basis, std::size_t M) {
  if (basis.F.size() < 3) throw OperatorError("Yukawa coupling needs an operator of order n >= 3");
  if (M > basis.truncation) throw SeriesError("basis truncation below requested order");
  QSeries F0 = basis.F[0].truncate(M), F1 = basis.F[1].truncate(M), F2 = basis.F[2].truncate(M);
  YukawaCoupling y;
  y.q_of_t = canonical_coordinate(F0, F1);
  y.t_of_q = reversion(y.q_of_t);
  QSeries r = F1 / F0;
  QSeries V_t = F2 / F0 - Rational(1, 2) * (r * r);
  y.V_of_q = compose(V_t, y.t_of_q);
  y.K_of_q = theta(theta(y.V_of_q));
  y.K_of_q[0] += 1;
  return y;
}

std::vector<Rational> lambert_coefficients(const QSeries& K, std::size_t R) {
  if (K.order() == 0 || K[0] != 1) throw SeriesError("Lambert expansion needs K(0) = 1");
  if (R >= K.order()) throw SeriesError("K known only to order " + std::to_string(K.order()));
  std::vector<Rational> A(R, Rational(0));
  for (std::size_t r = 1; r <= R; ++r)
    for (std::size_t d = 1; d <= r; ++d)
      if (r % d == 0) A[r - 1] += mobius(static_cast<std::int64_t>(d)) * K[r / d];
  return A;
}

std::vector<Rational> lambert_forward(const std::vector<Rational>& A) {
  std::vector<Rational> g(A.size(), Rational(0));
  for (std::size_t r = 1; r <= A.size(); ++r)
    for (std::size_t d = 1; d <= r; ++d)
      if (r % d == 0) g[r - 1] += A[d - 1];
  return g;
}

std::vector<Rational> instanton_numbers(const std::vector<Rational>& A, int s, const Rational& kappa) {
  if (s != 2 && s != 3) throw std::invalid_argument("divisor power s must be 2 or 3");
  std::vector<Rational> a;
  for (std::size_t r = 1; r <= A.size(); ++r) {
    Rational x = kappa * A[r - 1] / Rational(ipow(static_cast<std::int64_t>(r), s));
    x.canonicalize();
    a.push_back(x);
  }
  return a;
}

MirrorData mirror_pipeline(const ThetaOperator& L, std::size_t R, int s, const Rational& kappa) {
  std::size_t M = R + 2;
  FrobeniusBasis basis = frobenius_basis(L, M);
  YukawaCoupling y = yukawa(basis, M);
  MirrorData d;
  d.q_of_t = y.q_of_t;
  d.t_of_q = y.t_of_q;
  d.V_of_q = y.V_of_q;
  d.K_of_q = y.K_of_q;
  d.A = lambert_coefficients(y.K_of_q, R);
  d.s = s;
  d.kappa = kappa;
  d.a = instanton_numbers(d.A, s, kappa);
  return d;
}

const char* to_string(IntegralityOutcome o) {
  switch (o) {
    case IntegralityOutcome::kPass: return "pass";
    case IntegralityOutcome::kFail: return "fail";
    case IntegralityOutcome::kOutsideHypotheses: return "outside hypotheses";
  }
  return "?";
}

IntegralityReport check_integrality(const std::vector<Rational>& A, int s, std::int64_t p, std::int64_t N,
                                    std::int64_t excluded_up_to) {
  require_odd_prime(p);
  IntegralityReport rep;
  rep.p = p;
  rep.s = s;
  for (std::size_t r = 1; r <= A.size(); ++r) {
    Rational x = A[r - 1] / Rational(ipow(static_cast<std::int64_t>(r), s));
    Verdict v = is_p_integral(padic_of_rational(x, p, N));
    rep.per_r.push_back(v);
    if (v == Verdict::kFalse && !rep.first_failure) rep.first_failure = r;
  }
  if (p <= excluded_up_to) rep.outcome = IntegralityOutcome::kOutsideHypotheses;
  else rep.outcome = rep.first_failure ? IntegralityOutcome::kFail : IntegralityOutcome::kPass;
  return rep;
}

std::vector<bool> dieudonne_dwork_profile(const QSeries& g, std::int64_t p) {
  require_odd_prime(p);
  if (g.order() > 0 && g[0] != 0) throw SeriesError("Dieudonne-Dwork check needs g(0) = 0");
  QSeries d = g - frobenius_substitute(g, static_cast<std::size_t>(p)) * Rational(1, p);
  std::vector<bool> ok;
  for (std::size_t k = 0; k < d.order(); ++k) ok.push_back(p_integral(d[k], p));
  return ok;
}

std::vector<bool> exp_integrality_profile(const QSeries& g, std::int64_t p) {
  QSeries e = series_exp(g);
  std::vector<bool> ok;
  for (std::size_t k = 0; k < e.order(); ++k) ok.push_back(p_integral(e[k], p));
  return ok;
}

bool dieudonne_dwork_check(const QSeries& g, std::int64_t p, std::size_t M) {
  if (M > g.order()) throw SeriesError("series known only to order " + std::to_string(g.order()));
  std::vector<bool> ok = dieudonne_dwork_profile(g.truncate(M), p);
  for (bool b : ok)
    if (!b) return false;
  return true;
}

bool dwork_congruence_check(const std::vector<Rational>& g, std::int64_t p, int s) {
  require_odd_prime(p);
  for (std::size_t n = 1; n <= g.size(); ++n) {
    std::int64_t vn = valuation(Integer(static_cast<unsigned long>(n)), p);
    Rational prev = (n % p == 0) ? g[n / p - 1] : Rational(0);
    Rational diff = g[n - 1] - prev;
    if (diff == 0) continue;
    if (valuation(diff, p) < s * vn) return false;
  }
  return true;
}

}  // namespace cyint
