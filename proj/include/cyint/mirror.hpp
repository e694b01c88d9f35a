#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyint/diffop.hpp"
#include "cyint/padic.hpp"
#include "cyint/series.hpp"

namespace cyint {

struct MirrorData {
  QSeries q_of_t;
  QSeries t_of_q;
  QSeries V_of_q;
  QSeries K_of_q;
  /// A[r-1] = A_r.
  std::vector<Rational> A;
  int s = 3;
  Rational kappa = 1;
  /// a[r-1] = kappa * A_r / r^s.
  std::vector<Rational> a;
};

/// t * exp(F_1/F_0).
QSeries canonical_coordinate(const QSeries& F0, const QSeries& F1);

struct YukawaCoupling {
  QSeries q_of_t;
  QSeries t_of_q;
  QSeries V_of_q;
  QSeries K_of_q;
};

/// V = F_2/F_0 - (F_1/F_0)^2 / 2 in the q variable and K = 1 + theta_q^2 V.
/// Needs at least three basis elements; truncates everything to order M.
YukawaCoupling yukawa(const FrobeniusBasis& basis, std::size_t M);

/// A_r = sum_{d | r} mu(d) g_{r/d} with g_r = [q^r] K, for r = 1..R.
std::vector<Rational> lambert_coefficients(const QSeries& K, std::size_t R);

/// g_r = sum_{d | r} A_d, the inverse of lambert_coefficients.
std::vector<Rational> lambert_forward(const std::vector<Rational>& A);

/// kappa * A_r / r^s.
std::vector<Rational> instanton_numbers(const std::vector<Rational>& A, int s, const Rational& kappa);

/// Full chain from an operator to instanton numbers a_1..a_R (truncation R+2).
MirrorData mirror_pipeline(const ThetaOperator& L, std::size_t R, int s, const Rational& kappa);

enum class IntegralityOutcome { kPass, kFail, kOutsideHypotheses };
const char* to_string(IntegralityOutcome o);

struct IntegralityReport {
  std::int64_t p = 0;
  int s = 0;
  IntegralityOutcome outcome = IntegralityOutcome::kPass;
  /// Per r: is_p_integral(A_r / r^s).
  std::vector<Verdict> per_r;
  /// 1-based index of the first failing r.
  std::optional<std::size_t> first_failure;
};

/// Checks A_r / r^s in Z_p. Primes p <= excluded_up_to are outside the
/// hypotheses of the integrality theorems and reported as such.
IntegralityReport check_integrality(const std::vector<Rational>& A, int s, std::int64_t p, std::int64_t N,
                                    std::int64_t excluded_up_to = 0);

/// Per coefficient: [t^k](g - g(t^p)/p) is p-integral.
std::vector<bool> dieudonne_dwork_profile(const QSeries& g, std::int64_t p);
/// Per coefficient: [t^k] exp(g) is p-integral.
std::vector<bool> exp_integrality_profile(const QSeries& g, std::int64_t p);
/// g - g(t^p)/p is p-integral up to t^M.
bool dieudonne_dwork_check(const QSeries& g, std::int64_t p, std::size_t M);

/// g[n-1] = g_n. Checks v_p(g_n - g_{n/p}) >= s v_p(n), with g_{n/p} = 0 when p does not divide n.
bool dwork_congruence_check(const std::vector<Rational>& g, std::int64_t p, int s);

}  // namespace cyint
