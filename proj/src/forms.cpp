#include "cyint/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyint {

AdmissibleForm AdmissibleForm::inverse_f(std::size_t n, std::size_t order, int tpow) {
  return monomial(n, order, 1, zero_exponent(n), 0, Rational(1), tpow);
}

AdmissibleForm AdmissibleForm::monomial(std::size_t n, std::size_t order, int pole, const Exponent& u,
                                        std::size_t tdeg, const Rational& c, int tpow) {
  AdmissibleForm w(n, order, tpow);
  if (tdeg < order) w.add_term(pole, SeriesLaurent::monomial(u, QSeries::monomial(tdeg, order, Rational(0)) * c));
  return w;
}

void AdmissibleForm::add_term(int pole, const SeriesLaurent& numerator) {
  if (pole < 1) throw std::invalid_argument("pole order must be at least 1");
  if (numerator.empty()) return;
  for (auto& t : terms_)
    if (t.pole == pole) {
      t.numerator += numerator;
      return;
    }
  terms_.push_back({pole, numerator});
  std::sort(terms_.begin(), terms_.end(), [](const FormTerm& a, const FormTerm& b) { return a.pole < b.pole; });
}

AdmissibleForm& AdmissibleForm::operator+=(const AdmissibleForm& o) {
  if (o.tpow_ != tpow_ || o.n_ != n_) throw std::invalid_argument("adding forms over different denominators");
  order_ = std::min(order_, o.order_);
  for (const auto& t : o.terms_) add_term(t.pole, t.numerator);
  return *this;
}

AdmissibleForm AdmissibleForm::scaled(const Rational& c) const {
  AdmissibleForm w(n_, order_, tpow_);
  for (const auto& t : terms_) w.add_term(t.pole, t.numerator.scaled(c));
  return w;
}

AdmissibleForm AdmissibleForm::scaled(const QSeries& c) const {
  AdmissibleForm w(n_, order_, tpow_);
  for (const auto& t : terms_) w.add_term(t.pole, t.numerator.scaled(c));
  return w;
}

bool AdmissibleForm::admissible(const Polytope& P) const {
  for (const auto& t : terms_)
    if (!is_admissible(t.numerator, t.pole, P, tpow_)) return false;
  return true;
}

namespace {

SeriesLaurent g_times(const IntLaurent& g, std::size_t order, int tpow, const SeriesLaurent& a) {
  // t^tpow * g * a
  SeriesLaurent tg(g.dimension());
  for (const auto& [u, c] : g.terms())
    if (static_cast<std::size_t>(tpow) < order) tg.add(u, QSeries::monomial(tpow, order, Rational(0)) * Rational(c));
  return tg * a;
}

}  // namespace

AdmissibleForm theta(const AdmissibleForm& w, const IntLaurent& g) {
  // theta[(m-1)! A / f^m] = (m-1)! theta(A) / f^m + m! * tpow * t^tpow g A / f^(m+1)
  AdmissibleForm out(w.dimension(), w.order(), w.tpow());
  for (const auto& t : w.terms()) {
    out.add_term(t.pole, t.numerator.map_coefficients([](const QSeries& c) { return theta(c); }));
    out.add_term(t.pole + 1, g_times(g, w.order(), w.tpow(), t.numerator).scaled(Rational(w.tpow())));
  }
  return out;
}

AdmissibleForm theta_i(const AdmissibleForm& w, const IntLaurent& g, std::size_t i) {
  // theta_i[(m-1)! A / f^m] = (m-1)! theta_i(A) / f^m + m! t^tpow theta_i(g) A / f^(m+1)
  SeriesLaurent dg(g.dimension());
  for (const auto& [u, c] : g.terms())
    if (u.at(i) != 0 && static_cast<std::size_t>(w.tpow()) < w.order())
      dg.add(u, QSeries::monomial(w.tpow(), w.order(), Rational(0)) * Rational(c * u[i]));
  AdmissibleForm out(w.dimension(), w.order(), w.tpow());
  for (const auto& t : w.terms()) {
    out.add_term(t.pole, t.numerator.theta_i(i));
    out.add_term(t.pole + 1, dg * t.numerator);
  }
  return out;
}

QSeries period_map(const AdmissibleForm& w, const Family& fam, std::size_t order) {
  // 1/f^m = sum_k C(k+m-1, m-1) t^(tpow k) g^k, and only the x^0 part of A g^k survives.
  order = std::min(order, w.order());
  const Polytope& P = fam.polytope;
  std::size_t n = w.dimension();
  int tp = w.tpow();
  std::vector<Rational> out(order, Rational(0));
  Exponent zero = zero_exponent(n);
  for (const auto& term : w.terms()) {
    int m = term.pole;
    Rational pref(factorial(static_cast<unsigned>(m - 1)));
    // Sparse map exponent -> truncated coefficient list.
    std::map<Exponent, std::vector<Rational>> cur;
    for (const auto& [u, c] : term.numerator.terms()) {
      std::vector<Rational> v(std::min<std::size_t>(order, c.order()), Rational(0));
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = c[j];
      cur.emplace(u, v);
    }
    for (int k = 0;; ++k) {
      std::size_t shift = static_cast<std::size_t>(tp) * k;
      if (shift >= order) break;
      // Prune: a term t^j x^u needs at least deg(-u) further factors of g.
      for (auto it = cur.begin(); it != cur.end();) {
        Exponent neg(n);
        for (std::size_t i = 0; i < n; ++i) neg[i] = -it->first[i];
        long budget = static_cast<long>(order) - static_cast<long>(tp) * (k + P.degree(neg));
        auto& v = it->second;
        if (budget <= 0) {
          it = cur.erase(it);
          continue;
        }
        if (v.size() > static_cast<std::size_t>(budget)) v.resize(budget);
        ++it;
      }
      if (cur.empty()) break;
      auto z = cur.find(zero);
      if (z != cur.end()) {
        Rational c = pref * Rational(binomial(k + m - 1, m - 1));
        for (std::size_t j = 0; j < z->second.size() && j + shift < order; ++j) out[j + shift] += c * z->second[j];
      }
      std::map<Exponent, std::vector<Rational>> next;
      for (const auto& [u, v] : cur)
        for (const auto& [s, gc] : fam.g.terms()) {
          Exponent us = u + s;
          auto& dst = next[us];
          if (dst.size() < v.size()) dst.resize(v.size(), Rational(0));
          for (std::size_t j = 0; j < v.size(); ++j) dst[j] += Rational(gc) * v[j];
        }
      cur.swap(next);
    }
  }
  return QSeries(out, order, Rational(0));
}

}  // namespace cyint
