#include "cyint/reduction.hpp"

#include <algorithm>
#include <functional>

namespace cyint {

RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

RationalPoly poly_scale(const RationalPoly& a, const Rational& c) {
  if (c == 0) return {};
  RationalPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

RationalPoly poly_shift(const RationalPoly& a, std::size_t k) {
  if (a.empty()) return {};
  RationalPoly r(k, Rational(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

QSeries poly_series(const RationalPoly& c, std::size_t order, int tpow) {
  QSeries s(order, Rational(0));
  for (std::size_t i = 0; i < c.size() && i * tpow < order; ++i) s[i * tpow] = c[i];
  return s;
}

std::size_t ReducedVector::order() const {
  std::size_t m = ThetaOperator::kExact;
  for (const auto& x : b) m = std::min(m, x.order());
  return m;
}

namespace {

// acc += c * comb
void add_scaled(PoleCombination& acc, const PoleCombination& comb, const RationalPoly& c) {
  if (c.empty()) return;
  if (acc.size() < comb.size()) acc.resize(comb.size());
  for (std::size_t k = 0; k < comb.size(); ++k) acc[k] = poly_add(acc[k], poly_mul(comb[k], c));
}

PoleCombination basis_element(int m) {
  PoleCombination c(m + 1);
  c[m] = {Rational(1)};
  return c;
}

int weight(const std::vector<int>& w) {
  int s = 0;
  for (int x : w) s += x;
  return s;
}

// Coefficients of x^k + x^-k as a polynomial in X = x + 1/x.
std::vector<RationalPoly> chebyshev_table(int kmax) {
  std::vector<RationalPoly> P{{Rational(2)}, {Rational(0), Rational(1)}};
  for (int k = 1; k < kmax; ++k) P.push_back(poly_add(poly_shift(P[k], 1), poly_scale(P[k - 1], Rational(-1))));
  P.resize(std::max(kmax + 1, 1));
  return P;
}

}  // namespace

Reducer::Reducer(const Family& fam) : fam_(fam), simplicial_(fam.spec.kind == FamilyKind::kSimplicial) {
  if (!fam.builtin()) throw ReductionError("reduction formulas exist only for the builtin families");
}

PoleCombination Reducer::reduce_E(int m, const std::vector<int>& v) {
  // E(m, v) = m! t^|v| x^v / f^(m+1) in homogeneous coordinates x_0 ... x_n.
  auto key = std::make_pair(m, v);
  auto it = memo_E_.find(key);
  if (it != memo_E_.end()) return it->second;
  PoleCombination out;
  int nv = weight(v);
  if (nv == 0) {
    out = basis_element(m);
  } else {
    std::size_t i = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] > 0 && (i == v.size() || v[j] < v[i])) i = j;
    std::vector<int> w = v;
    --w[i];
    Rational n1(static_cast<long>(v.size()));
    Rational b = Rational(nv - 1 - m) / n1 - w[i];
    add_scaled(out, reduce_E(m, w), {1 / n1});
    if (b != 0) {
      if (m == 0 || nv - 1 > m - 1) throw ReductionError("monomial outside the interior of its pole order");
      add_scaled(out, reduce_E(m - 1, w), {b});
    }
  }
  memo_E_.emplace(key, out);
  return out;
}

PoleCombination Reducer::reduce_T(int m, int r) {
  // T(m, r) = m! r! t^r s_r / f^(m+1), s_r the elementary symmetric polynomial in X_1..X_n.
  auto key = std::make_pair(m, r);
  auto it = memo_T_.find(key);
  if (it != memo_T_.end()) return it->second;
  if (r > m) throw ReductionError("symmetric reduction outside its range");
  PoleCombination out;
  if (r == 0) {
    out = basis_element(m);
  } else {
    int n = static_cast<int>(dimension());
    add_scaled(out, reduce_T(m - 1, r - 1), {Rational(r - 1 - m)});
    add_scaled(out, reduce_T(m, r - 1), {Rational(1)});
    if (r >= 2) add_scaled(out, reduce_T(m, r - 2), poly_shift({Rational(-4 * (n + 2 - r) * (r - 1))}, 2));
  }
  memo_T_.emplace(key, out);
  return out;
}

PoleCombination Reducer::reduce_H(int m, std::vector<int> a) {
  // H(m, a) = m! t^|a| X^a / f^(m+1); symmetric in a after averaging, so a is kept sorted.
  std::sort(a.rbegin(), a.rend());
  auto key = std::make_pair(m, a);
  auto it = memo_H_.find(key);
  if (it != memo_H_.end()) return it->second;
  if (weight(a) > m) throw ReductionError("monomial outside its pole order");
  PoleCombination out;
  if (a.front() >= 2) {
    std::vector<int> b = a;
    b[0] -= 2;
    add_scaled(out, reduce_H(m, b), poly_shift({Rational(4)}, 2));
    std::vector<int> up = b;
    ++up[0];
    add_scaled(out, reduce_H(m - 1, up), {Rational(-(1 + b[0]))});
    if (b[0] >= 1) {
      std::vector<int> down = b;
      --down[0];
      add_scaled(out, reduce_H(m - 1, down), poly_shift({Rational(4 * b[0])}, 2));
    }
  } else {
    int r = weight(a);
    Rational c = 1 / Rational(factorial(r) * binomial(static_cast<long>(dimension()), r));
    add_scaled(out, reduce_T(m, r), {c});
  }
  memo_H_.emplace(key, out);
  return out;
}

PoleCombination Reducer::reduce_monomial(int m, const Exponent& u) {
  const Polytope& P = fam_.polytope;
  int d = P.degree(u);
  if (d > m) throw ReductionError("monomial " + to_string(u) + " has degree above the pole order");
  std::size_t n = dimension();
  if (simplicial_) {
    int w0 = std::max(0, -*std::min_element(u.begin(), u.end()));
    std::vector<int> w{w0};
    for (int x : u) w.push_back(x + w0);
    return reduce_E(m, w);
  }
  // Average over sign changes: x^u -> prod_i P_|u_i|(X_i) / 2, leftover t-powers kept in the coefficient.
  int kmax = 0;
  for (int x : u) kmax = std::max(kmax, std::abs(x));
  auto cheb = chebyshev_table(kmax);
  PoleCombination out;
  std::vector<int> a(n);
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational c) {
    if (i == n) {
      int extra = d - weight(a);
      add_scaled(out, reduce_H(m, a), poly_shift({c}, extra));
      return;
    }
    const RationalPoly& Pk = cheb[std::abs(u[i])];
    for (std::size_t j = 0; j < Pk.size(); ++j) {
      if (Pk[j] == 0) continue;
      a[i] = static_cast<int>(j);
      rec(i + 1, c * Pk[j] / 2);
    }
  };
  rec(0, Rational(1));
  return out;
}

const ThetaOperator& Reducer::picard_fuchs() {
  if (pf_) return *pf_;
  int n = static_cast<int>(dimension());
  PoleCombination rel;
  if (simplicial_) {
    // x_0 ... x_n = 1, so E(n, (1,...,1)) = t^(n+1) E(n, 0).
    rel = reduce_E(n, std::vector<int>(n + 1, 1));
    add_scaled(rel, basis_element(n), poly_shift({Rational(-1)}, n + 1));
  } else {
    // s_(n+1) = 0 turns the symmetric recursion at r = m = n into a relation.
    rel = reduce_T(n, n);
    add_scaled(rel, reduce_T(n, n - 1), poly_shift({Rational(-4 * n)}, 2));
  }
  // (theta+1)_k expanded in powers of theta.
  std::vector<RationalPoly> coeffs(n + 1);
  RationalPoly poch{Rational(1)};
  for (std::size_t k = 0; k < rel.size(); ++k) {
    if (k > 0) poch = poly_mul(poch, {Rational(static_cast<long>(k)), Rational(1)});
    for (std::size_t j = 0; j < poch.size(); ++j)
      if (j <= static_cast<std::size_t>(n)) coeffs[j] = poly_add(coeffs[j], poly_scale(rel[k], poch[j]));
      else if (!rel[k].empty()) throw ReductionError("relation exceeds the expected order");
  }
  if (coeffs[n].empty() || coeffs[n][0] == 0) throw ReductionError("derived relation is not of maximal order");
  Rational lead = coeffs[n][0];
  for (auto& c : coeffs) c = poly_scale(c, 1 / lead);
  pf_ = ThetaOperator(coeffs);
  return *pf_;
}

const std::vector<QSeries>& Reducer::monic_coefficients(std::size_t order) {
  if (monic_order_ == order && !monic_.empty()) return monic_;
  const ThetaOperator& L = picard_fuchs();
  std::size_t n = dimension();
  QSeries inv = L.coefficient_series(n, order).inverse();
  monic_.clear();
  for (std::size_t i = 0; i < n; ++i) monic_.push_back(L.coefficient_series(i, order) * inv);
  monic_order_ = order;
  return monic_;
}

std::vector<QSeries> Reducer::theta_step(const std::vector<QSeries>& v, const std::vector<QSeries>& a) const {
  std::size_t n = v.size();
  std::vector<QSeries> out;
  for (std::size_t i = 0; i < n; ++i) {
    QSeries c = cyint::theta(v[i]);
    if (i > 0) c += v[i - 1];
    c -= v[n - 1] * a[i];
    out.push_back(c);
  }
  return out;
}

std::vector<QSeries> Reducer::pochhammer_row(std::size_t k, std::size_t order) {
  if (rows_order_ != order) {
    rows_.clear();
    rows_order_ = order;
  }
  std::size_t n = dimension();
  if (rows_.empty()) {
    std::vector<QSeries> e(n, QSeries(order, Rational(0)));
    e[0] = QSeries::constant(Rational(1), order);
    rows_.push_back(e);
  }
  while (rows_.size() <= k) {
    const auto& a = monic_coefficients(order);
    const auto& prev = rows_.back();
    auto next = theta_step(prev, a);
    Rational j(static_cast<long>(rows_.size()));
    for (std::size_t i = 0; i < n; ++i) next[i] += prev[i] * j;
    rows_.push_back(next);
  }
  return rows_[k];
}

ReducedVector Reducer::reduce(const AdmissibleForm& form, bool symmetrize) {
  if (form.dimension() != dimension()) throw ReductionError("form dimension does not match the family");
  if (!simplicial_ && !symmetrize && !is_hyperoctahedral_symmetric(form))
    throw ReductionError("numerator is not symmetric; request symmetrization");
  const Polytope& P = fam_.polytope;
  int tp = form.tpow();
  std::size_t order = form.order();
  for (const auto& term : form.terms())
    for (const auto& [u, c] : term.numerator.terms()) {
      std::size_t lost = static_cast<std::size_t>(tp * P.degree(u));
      order = std::min(order, c.order() > lost ? c.order() - lost : 0);
    }
  std::vector<QSeries> C;
  for (const auto& term : form.terms()) {
    for (const auto& [u, c] : term.numerator.terms()) {
      int d = P.degree(u);
      if (d > term.pole - 1) throw ReductionError("numerator not supported in the interior of its pole order");
      std::size_t lost = static_cast<std::size_t>(tp * d);
      QSeries reduced(order, Rational(0));
      for (std::size_t j = 0; j < c.order(); ++j) {
        if (j < lost) {
          if (c[j] != 0) throw ReductionError("numerator is not admissible");
        } else if (j - lost < order) {
          reduced[j - lost] = c[j];
        }
      }
      if (reduced.is_zero()) continue;
      PoleCombination comb = reduce_monomial(term.pole - 1, u);
      if (C.size() < comb.size()) C.resize(comb.size(), QSeries(order, Rational(0)));
      for (std::size_t k = 0; k < comb.size(); ++k)
        if (!comb[k].empty()) C[k] += reduced * poly_series(comb[k], order, tp);
    }
  }
  std::size_t n = dimension();
  ReducedVector out;
  out.b.assign(n, QSeries(order, Rational(0)));
  std::size_t tau_order = order / tp + 1;
  for (std::size_t k = 0; k < C.size(); ++k) {
    auto row = pochhammer_row(k, tau_order);
    for (std::size_t i = 0; i < n; ++i) {
      QSeries r(order, Rational(0));
      for (std::size_t j = 0; j < tau_order && j * tp < order; ++j) r[j * tp] = row[i][j];
      out.b[i] += C[k] * r;
    }
  }
  return out;
}

ReducedVector Reducer::theta(const ReducedVector& v) {
  std::size_t order = v.order();
  ReducedVector out;
  out.b = theta_step(v.b, monic_coefficients(order));
  return out;
}

ReducedVector reduce_simplicial(const AdmissibleForm& form, std::size_t n) {
  Reducer r(build_family(FamilySpec::simplicial(n)));
  return r.reduce(form);
}

ReducedVector reduce_hyperoctahedral(const AdmissibleForm& form, std::size_t n, bool symmetrize) {
  Reducer r(build_family(FamilySpec::hyperoctahedral(n)));
  return r.reduce(form, symmetrize);
}

bool is_hyperoctahedral_symmetric(const AdmissibleForm& form) {
  std::size_t n = form.dimension();
  auto same = [](const SeriesLaurent& a, const SeriesLaurent& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [u, c] : a.terms()) {
      auto it = b.terms().find(u);
      if (it == b.terms().end() || !it->second.agrees_with(c)) return false;
    }
    return true;
  };
  for (const auto& term : form.terms()) {
    const SeriesLaurent& A = term.numerator;
    std::vector<std::function<Exponent(const Exponent&)>> gens;
    gens.push_back([](const Exponent& u) {
      Exponent v = u;
      v[0] = -v[0];
      return v;
    });
    for (std::size_t i = 1; i < n; ++i)
      gens.push_back([i](const Exponent& u) {
        Exponent v = u;
        std::swap(v[0], v[i]);
        return v;
      });
    for (const auto& gfn : gens) {
      SeriesLaurent img(n);
      for (const auto& [u, c] : A.terms()) img.add(gfn(u), c);
      if (!same(A, img)) return false;
    }
  }
  return true;
}

QSeries evaluate_class(const ReducedVector& v, const QSeries& F0) {
  std::size_t order = std::min(v.order(), F0.order());
  QSeries acc(order, Rational(0)), power = F0.truncate(order);
  for (std::size_t j = 0; j < v.b.size(); ++j) {
    if (j > 0) power = theta(power);
    acc += v.b[j] * power;
  }
  return acc;
}

ThetaOperator derive_picard_fuchs(const Family& fam, std::size_t M) {
  Reducer red(fam);
  ThetaOperator L = red.picard_fuchs();
  std::size_t maxdeg = 0;
  for (const auto& c : L.coeffs()) maxdeg = std::max(maxdeg, c.size());
  if (M < maxdeg) throw ReductionError("truncation M is below the coefficient degree; increase M");
  if (!is_mum(L)) throw std::logic_error("derived operator is not MUM");
  QSeries F0 = constant_term_series(fam.g, fam.polytope, M);
  if (!L.apply(F0).is_zero()) throw std::logic_error("derived operator does not annihilate the period");
  // L(1/f) as a form reduces to zero.
  std::size_t n = fam.dimension();
  AdmissibleForm power = AdmissibleForm::inverse_f(n, M);
  AdmissibleForm image(n, M);
  for (std::size_t j = 0; j <= n; ++j) {
    if (j > 0) power = cyint::theta(power, fam.g);
    image += power.scaled(L.coefficient_series(j, M));
  }
  ReducedVector v = red.reduce(image);
  for (const auto& b : v.b)
    if (!b.is_zero()) throw std::logic_error("L(1/f) does not reduce to zero");
  return L;
}

}  // namespace cyint
