#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyint/series.hpp"

namespace cyint {

using Exponent = std::vector<int>;

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline Exponent operator*(int k, const Exponent& a) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}
std::string to_string(const Exponent& e);

inline bool coeff_is_zero(const Rational& x) { return x == 0; }
inline bool coeff_is_zero(const Integer& x) { return x == 0; }
template <class R>
bool coeff_is_zero(const TruncatedSeries<R>& x) {
  return x.is_zero();
}

/// Finitely supported sum of c_u x^u over Z^n; zero coefficients are never stored.
template <class C>
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, C>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t n) : n_(n) {}

  static LaurentPoly monomial(const Exponent& u, const C& c) {
    LaurentPoly p(u.size());
    p.add(u, c);
    return p;
  }

  std::size_t dimension() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const Exponent& u, const C& c) {
    if (u.size() != n_) throw std::invalid_argument("exponent dimension mismatch");
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(u);
    if (it == terms_.end()) {
      terms_.emplace(u, c);
      return;
    }
    it->second += c;
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }

  /// Coefficient of x^u, or `zero` when absent.
  C coefficient(const Exponent& u, const C& zero) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? zero : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [u, c] : o.terms_) add(u, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [u, c] : o.terms_) add(u, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  template <class K>
  LaurentPoly scaled(const K& k) const {
    LaurentPoly r(n_);
    for (const auto& [u, c] : terms_) r.add(u, c * k);
    return r;
  }

  /// Product, keeping only exponents accepted by `keep`.
  LaurentPoly multiply(const LaurentPoly& o, const std::function<bool(const Exponent&)>& keep = nullptr) const {
    LaurentPoly r(n_);
    for (const auto& [u, a] : terms_)
      for (const auto& [v, b] : o.terms_) {
        Exponent w = u + v;
        if (keep && !keep(w)) continue;
        r.add(w, a * b);
      }
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return a.multiply(b); }

  template <class F>
  auto map_coefficients(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    LaurentPoly<D> r(n_);
    for (const auto& [u, c] : terms_) r.add(u, f(c));
    return r;
  }

  /// x_i d/dx_i.
  LaurentPoly theta_i(std::size_t i) const {
    LaurentPoly r(n_);
    for (const auto& [u, c] : terms_) r.add(u, c * Rational(u.at(i)));
    return r;
  }

  /// Keeps exponents divisible by p and divides them by p.
  LaurentPoly cartier(int p) const {
    LaurentPoly r(n_);
    for (const auto& [u, c] : terms_) {
      bool ok = true;
      for (int x : u)
        if (x % p != 0) ok = false;
      if (!ok) continue;
      Exponent v(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] / p;
      r.add(v, c);
    }
    return r;
  }

  /// x -> x^p.
  LaurentPoly frobenius_x(int p) const {
    LaurentPoly r(n_);
    for (const auto& [u, c] : terms_) r.add(p * u, c);
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

using IntLaurent = LaurentPoly<Integer>;
using QLaurent = LaurentPoly<Rational>;
/// Laurent polynomial with coefficients in Q[[t]]/t^M.
using SeriesLaurent = LaurentPoly<QSeries>;

inline Exponent zero_exponent(std::size_t n) { return Exponent(n, 0); }
inline Exponent unit_exponent(std::size_t n, std::size_t i, int sign = 1) {
  Exponent e(n, 0);
  e.at(i) = sign;
  return e;
}

}  // namespace cyint
