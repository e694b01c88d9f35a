#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyint/ring.hpp"

namespace cyint {

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// c_0 + c_1 t + ... + c_{M-1} t^{M-1} + O(t^M) over a coefficient ring R.
template <class R>
class TruncatedSeries {
 public:
  TruncatedSeries() : TruncatedSeries(0, R{}) {}
  TruncatedSeries(std::size_t order, const R& zero_like) : zero_(ring_zero(zero_like)), c_(order, zero_) {}
  TruncatedSeries(std::vector<R> coeffs, std::size_t order, const R& zero_like)
      : zero_(ring_zero(zero_like)), c_(std::move(coeffs)) {
    c_.resize(order, zero_);
  }

  static TruncatedSeries constant(const R& value, std::size_t order) {
    TruncatedSeries s(order, value);
    if (order > 0) s.c_[0] = value;
    return s;
  }
  /// The series t^k.
  static TruncatedSeries monomial(std::size_t k, std::size_t order, const R& zero_like) {
    TruncatedSeries s(order, zero_like);
    if (k < order) s.c_[k] = ring_one(zero_like);
    return s;
  }
  static TruncatedSeries from_rationals(const std::vector<Rational>& coeffs, std::size_t order, const R& zero_like) {
    TruncatedSeries s(order, zero_like);
    for (std::size_t i = 0; i < std::min(order, coeffs.size()); ++i) s.c_[i] = embed(zero_like, coeffs[i]);
    return s;
  }

  std::size_t order() const { return c_.size(); }
  const R& operator[](std::size_t i) const { return c_[i]; }
  R& operator[](std::size_t i) { return c_[i]; }
  /// Coefficient of t^i, or zero beyond the stored range.
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& zero_element() const { return zero_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& x) { return cyint::is_zero(x); });
  }
  /// Index of the first coefficient not known to vanish; order() if none.
  std::size_t low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!cyint::is_zero(c_[i])) return i;
    return c_.size();
  }

  TruncatedSeries truncate(std::size_t order) const {
    if (order > c_.size()) throw SeriesError("cannot extend a truncated series");
    TruncatedSeries s = *this;
    s.c_.resize(order);
    return s;
  }

  /// Multiplication by t^k (drops terms past the order).
  TruncatedSeries shift(std::size_t k) const {
    TruncatedSeries s(order(), zero_);
    for (std::size_t i = 0; i + k < order(); ++i) s.c_[i + k] = c_[i];
    return s;
  }

  template <class F>
  auto map(F&& f) const {
    using S = decltype(f(c_[0]));
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    S z = f(zero_);
    return TruncatedSeries<S>(std::move(out), c_.size(), z);
  }

  TruncatedSeries operator-() const {
    TruncatedSeries s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
  }
  TruncatedSeries& operator+=(const TruncatedSeries& b) {
    std::size_t m = std::min(order(), b.order());
    c_.resize(m);
    for (std::size_t i = 0; i < m; ++i) c_[i] += b.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& b) {
    std::size_t m = std::min(order(), b.order());
    c_.resize(m);
    for (std::size_t i = 0; i < m; ++i) c_[i] -= b.c_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const R& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const R& k) { return a *= k; }
  friend TruncatedSeries operator*(const R& k, TruncatedSeries a) { return a *= k; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t m = std::min(a.order(), b.order());
    TruncatedSeries s(m, a.zero_);
    std::size_t la = a.low_degree(), lb = b.low_degree();
    for (std::size_t i = la; i < m; ++i) {
      if (cyint::is_zero(a.c_[i])) continue;
      for (std::size_t j = lb; i + j < m; ++j) {
        if (cyint::is_zero(b.c_[j])) continue;
        s.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return s;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }

  /// Multiplicative inverse; needs an invertible constant term.
  TruncatedSeries inverse() const {
    if (order() == 0) return *this;
    if (!is_invertible(c_[0])) throw SeriesError("series constant term is not invertible");
    TruncatedSeries s(order(), zero_);
    R inv0 = ring_one(zero_) / c_[0];
    s.c_[0] = inv0;
    for (std::size_t n = 1; n < order(); ++n) {
      R acc = zero_;
      for (std::size_t k = 1; k <= n; ++k) {
        if (cyint::is_zero(c_[k])) continue;
        acc += c_[k] * s.c_[n - k];
      }
      s.c_[n] = -(acc * inv0);
    }
    return s;
  }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t m = std::min(a.order(), b.order());
    return a.truncate(m) * b.truncate(m).inverse();
  }

  /// Series equality on the common prefix.
  bool agrees_with(const TruncatedSeries& b) const {
    std::size_t m = std::min(order(), b.order());
    for (std::size_t i = 0; i < m; ++i)
      if (!cyint::is_zero(c_[i] - b.c_[i])) return false;
    return true;
  }

 private:
  R zero_;
  std::vector<R> c_;
};

/// theta = t d/dt.
template <class R>
TruncatedSeries<R> theta(const TruncatedSeries<R>& a) {
  TruncatedSeries<R> s = a;
  for (std::size_t k = 0; k < a.order(); ++k) s[k] = a[k] * embed(a.zero_element(), Rational(static_cast<long>(k)));
  return s;
}

/// d/dt.
template <class R>
TruncatedSeries<R> derivative(const TruncatedSeries<R>& a) {
  std::size_t m = a.order() == 0 ? 0 : a.order() - 1;
  TruncatedSeries<R> s(m, a.zero_element());
  for (std::size_t k = 0; k < m; ++k) s[k] = a[k + 1] * embed(a.zero_element(), Rational(static_cast<long>(k + 1)));
  return s;
}

template <class R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& a) {
  std::size_t m = a.order();
  if (m > 0 && !is_zero(a[0])) throw SeriesError("exp requires zero constant term");
  TruncatedSeries<R> b(m, a.zero_element());
  if (m == 0) return b;
  b[0] = ring_one(a.zero_element());
  // n b_n = sum_k k a_k b_{n-k}
  for (std::size_t n = 1; n < m; ++n) {
    R acc = a.zero_element();
    for (std::size_t k = 1; k <= n; ++k) {
      if (is_zero(a[k])) continue;
      acc += embed(a.zero_element(), Rational(static_cast<long>(k))) * a[k] * b[n - k];
    }
    b[n] = acc * embed(a.zero_element(), Rational(1, static_cast<long>(n)));
  }
  return b;
}

template <class R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& a) {
  std::size_t m = a.order();
  if (m > 0 && !is_zero(a[0] - ring_one(a.zero_element()))) throw SeriesError("log requires constant term 1");
  TruncatedSeries<R> c(m, a.zero_element());
  // n c_n = n a_n - sum_{k<n} k c_k a_{n-k}
  for (std::size_t n = 1; n < m; ++n) {
    R acc = embed(a.zero_element(), Rational(static_cast<long>(n))) * a[n];
    for (std::size_t k = 1; k < n; ++k) {
      if (is_zero(c[k])) continue;
      acc -= embed(a.zero_element(), Rational(static_cast<long>(k))) * c[k] * a[n - k];
    }
    c[n] = acc * embed(a.zero_element(), Rational(1, static_cast<long>(n)));
  }
  return c;
}

/// outer(inner(t)); inner must have zero constant term.
template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
  if (inner.order() > 0 && !is_zero(inner[0])) throw SeriesError("compose requires inner(0) = 0");
  std::size_t m = std::min(outer.order(), inner.order());
  TruncatedSeries<R> in = inner.truncate(m);
  TruncatedSeries<R> acc(m, outer.zero_element());
  for (std::size_t k = m; k-- > 0;) {
    acc = acc * in;
    if (m > 0) acc[0] += outer[k];
  }
  return acc;
}

/// Compositional inverse of t + O(t^2) by Newton iteration.
template <class R>
TruncatedSeries<R> reversion(const TruncatedSeries<R>& q) {
  std::size_t m = q.order();
  const R& z = q.zero_element();
  if (m > 0 && !is_zero(q[0])) throw SeriesError("reversion requires zero constant term");
  if (m > 1 && !is_invertible(q[1])) throw SeriesError("reversion requires an invertible linear coefficient");
  if (m <= 1) return TruncatedSeries<R>::monomial(1, m, z);
  // T <- T - (q(T) - Q) / q'(T), doubling the correct prefix each step.
  TruncatedSeries<R> t = TruncatedSeries<R>::monomial(1, 2, z) * (ring_one(z) / q[1]);
  if (m == 2) return t;
  std::size_t have = 2;
  while (have < m) {
    std::size_t next = std::min(m, 2 * have);
    TruncatedSeries<R> tn(t.coeffs(), next, z);
    TruncatedSeries<R> qn = q.truncate(next);
    TruncatedSeries<R> residual = compose(qn, tn) - TruncatedSeries<R>::monomial(1, next, z);
    TruncatedSeries<R> dq(derivative(qn).coeffs(), next, z);
    TruncatedSeries<R> slope = compose(dq, tn);
    t = tn - residual / slope;
    have = next;
  }
  return t;
}

/// t -> t^p.
template <class R>
TruncatedSeries<R> frobenius_substitute(const TruncatedSeries<R>& a, std::size_t p) {
  TruncatedSeries<R> s(a.order(), a.zero_element());
  for (std::size_t k = 0; k * p < a.order(); ++k) s[k * p] = a[k];
  return s;
}

template <class R>
std::vector<std::string> coefficient_strings(const TruncatedSeries<R>& a) {
  std::vector<std::string> out;
  for (const auto& x : a.coeffs()) out.push_back(to_string(x));
  return out;
}

using QSeries = TruncatedSeries<Rational>;
using PSeries = TruncatedSeries<PadicScalar>;

/// Exact-rational series mapped coefficientwise into Q_p at relative precision N.
PSeries to_padic(const QSeries& a, std::int64_t p, std::int64_t precision);

}  // namespace cyint
