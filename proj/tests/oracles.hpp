#pragma once

// Independent reference computations used as test oracles. They avoid the
// library's series code on purpose and favour obviousness over speed.

#include <vector>

#include "cyint/rational.hpp"

namespace oracle {

using cyint::Integer;
using cyint::Rational;
using Vec = std::vector<Rational>;

inline Vec mul(const Vec& a, const Vec& b) {
  Vec r(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Vec inv(const Vec& a) {
  Vec r(a.size(), Rational(0));
  r[0] = 1 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    Rational s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * r[n - k];
    r[n] = -s / a[0];
  }
  return r;
}

// exp as sum_k g^k / k! (g(0) = 0).
inline Vec exp(const Vec& g) {
  Vec r(g.size(), Rational(0)), term(g.size(), Rational(0));
  r[0] = term[0] = 1;
  for (std::size_t k = 1; k < g.size(); ++k) {
    term = mul(term, g);
    for (auto& x : term) x /= static_cast<long>(k);
    for (std::size_t i = 0; i < g.size(); ++i) r[i] += term[i];
  }
  return r;
}

// a(b(t)) by summing powers of b.
inline Vec compose(const Vec& a, const Vec& b) {
  Vec r(a.size(), Rational(0)), power(a.size(), Rational(0));
  power[0] = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[k] * power[i];
    power = mul(power, b);
  }
  return r;
}

// Lagrange inversion of q(t) = t + ...
inline Vec reversion(const Vec& q) {
  std::size_t M = q.size();
  Vec ratio(M, Rational(0));
  for (std::size_t i = 0; i + 1 < M; ++i) ratio[i] = q[i + 1];
  Vec phi = inv(ratio), power(M, Rational(0)), out(M, Rational(0));
  power[0] = 1;
  for (std::size_t n = 1; n < M; ++n) {
    power = mul(power, phi);
    out[n] = power[n - 1] / static_cast<long>(n);
  }
  return out;
}

inline Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Quintic Frobenius coefficients via the ratio c(k+e)/c(e) = prod (5e+j) / prod (e+j)^5:
// F_0 = c, F_1 = c D1, F_2 = c (D1^2 + D2)/2 with D1, D2 the first two log-derivatives.
struct QuinticBasis {
  Vec F0, F1, F2;
};

inline QuinticBasis quintic_basis(std::size_t M) {
  QuinticBasis b{Vec(M), Vec(M), Vec(M)};
  for (std::size_t k = 0; k < M; ++k) {
    long kk = static_cast<long>(k);
    Integer d = factorial(kk);
    Rational c(factorial(5 * kk) / (d * d * d * d * d));
    Rational D1 = 0, D2 = 0;
    for (long j = 1; j <= 5 * kk; ++j) {
      D1 += Rational(5, j);
      D2 -= Rational(25, j * j);
    }
    for (long j = 1; j <= kk; ++j) {
      D1 -= Rational(5, j);
      D2 += Rational(5, j * j);
    }
    b.F0[k] = c;
    b.F1[k] = c * D1;
    b.F2[k] = c * (D1 * D1 + D2) / 2;
  }
  return b;
}

// q -> t(q) -> V -> K -> Lambert -> a_r = kappa A_r / r^3.
inline Vec instantons_from_basis(const Vec& F0, const Vec& F1, const Vec& F2, std::size_t R, const Rational& kappa,
                                 int s) {
  std::size_t M = F0.size();
  Vec i0 = inv(F0);
  Vec r1 = mul(F1, i0), r2 = mul(F2, i0);
  Vec e = exp(r1);
  Vec q(M, Rational(0));
  for (std::size_t i = 0; i + 1 < M; ++i) q[i + 1] = e[i];
  Vec tq = reversion(q);
  Vec sq = mul(r1, r1);
  Vec V(M);
  for (std::size_t i = 0; i < M; ++i) V[i] = r2[i] - sq[i] / 2;
  Vec Vq = compose(V, tq);
  Vec K(M);
  for (std::size_t i = 0; i < M; ++i) K[i] = Vq[i] * static_cast<long>(i * i);
  K[0] += 1;
  // Peel off A_r q^r / (1 - q^r) greedily.
  Vec rest = K, a;
  for (std::size_t r = 1; r <= R; ++r) {
    Rational A = rest[r];
    for (std::size_t m = r; m < M; m += r) rest[m] -= A;
    Rational x = kappa * A;
    for (int j = 0; j < s; ++j) x /= static_cast<long>(r);
    a.push_back(x);
  }
  return a;
}

}  // namespace oracle
