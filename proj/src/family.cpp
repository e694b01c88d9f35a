#include "cyint/family.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cyint {

namespace {

std::vector<Rational> nullspace_vector(const std::vector<Exponent>& rows, std::size_t n) {
  // Reduced row echelon form, then one free column set to 1.
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Rational inv = 1 / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c] != 0) {
        Rational k = m[r][c];
        for (std::size_t j = 0; j < n; ++j) m[r][j] -= k * m[rank][j];
      }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  std::size_t free = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) ++free;
  std::vector<Rational> v(n, Rational(0));
  v[free] = 1;
  for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
  return v;
}

void for_each_subset(std::size_t total, std::size_t size, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(size);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == size) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i < total; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

int eval(const std::vector<int>& l, const Exponent& u) {
  int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += l[i] * u[i];
  return s;
}

}  // namespace

std::vector<Exponent> vertices_from_facets(const std::vector<Exponent>& support,
                                           const std::vector<std::vector<int>>& facets) {
  std::vector<Exponent> out;
  for (const auto& u : support) {
    std::vector<Exponent> act;
    for (const auto& l : facets)
      if (eval(l, u) == 1) act.push_back(Exponent(l.begin(), l.end()));
    if (!act.empty() && vector_rank(act) == u.size()) out.push_back(u);
  }
  return out;
}

std::string reflexivity_problem(const std::vector<Exponent>& support, const std::vector<std::vector<int>>& facets) {
  if (support.empty()) return "empty support";
  std::size_t n = support.front().size();
  for (const auto& l : facets)
    if (l.size() != n) return "facet functional has wrong length";
  std::vector<Exponent> diffs;
  for (const auto& u : support) diffs.push_back(u - support.front());
  if (vector_rank(diffs) != n) return "support is not full-dimensional";
  for (const auto& u : support)
    for (const auto& l : facets)
      if (eval(l, u) > 1) return "support point " + to_string(u) + " lies outside a facet";
  for (const auto& l : facets) {
    std::vector<Exponent> on;
    for (const auto& u : support)
      if (eval(l, u) == 1) on.push_back(u);
    if (vector_rank(on) != n) return "a facet functional does not cut out a facet";
  }
  std::string problem;
  // Every supporting hyperplane l = 1 through n independent support points must be a listed, integral facet.
  for_each_subset(support.size(), n, [&](const std::vector<std::size_t>& idx) {
    if (!problem.empty()) return;
    std::vector<Exponent> pts;
    for (auto i : idx) pts.push_back(support[i]);
    if (vector_rank(pts) != n) return;
    // Solve l(u_j) = 1 via the transposed system.
    std::vector<Exponent> cols(n, Exponent(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) cols[i][j] = pts[j][i];
    std::vector<Rational> l;
    solve_combination(cols, Exponent(n, 1), l);
    for (const auto& u : support) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += l[i] * u[i];
      if (s > 1) return;
    }
    std::vector<int> li(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (l[i].get_den() != 1) {
        problem = "facet through " + to_string(pts.front()) + " is not at integral distance 1";
        return;
      }
      li[i] = static_cast<int>(l[i].get_num().get_si());
    }
    if (std::find(facets.begin(), facets.end(), li) == facets.end()) problem = "facet list is incomplete";
  });
  if (!problem.empty()) return problem;
  // The origin must be interior: no supporting hyperplane through it.
  for_each_subset(support.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    if (!problem.empty()) return;
    std::vector<Exponent> pts;
    for (auto i : idx) pts.push_back(support[i]);
    if (!pts.empty() && vector_rank(pts) != n - 1) return;
    auto nu = nullspace_vector(pts, n);
    bool pos = false, neg = false;
    for (const auto& u : support) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += nu[i] * u[i];
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (!(pos && neg)) problem = "origin is not an interior point";
  });
  return problem;
}

SeriesLaurent Family::f(std::size_t order, int tpow) const {
  SeriesLaurent out(spec.n);
  out.add(zero_exponent(spec.n), QSeries::constant(Rational(1), order));
  if (static_cast<std::size_t>(tpow) < order)
    for (const auto& [u, c] : g.terms()) out.add(u, QSeries::monomial(tpow, order, Rational(0)) * Rational(-c));
  return out;
}

std::string family_name(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kSimplicial: return "simplicial:" + std::to_string(spec.n);
    case FamilyKind::kHyperoctahedral: return "hyperoctahedral:" + std::to_string(spec.n);
    case FamilyKind::kCustom: return "custom:" + std::to_string(spec.n);
  }
  return "unknown";
}

Family build_family(const FamilySpec& spec) {
  Family fam;
  fam.spec = spec;
  fam.name = family_name(spec);
  std::size_t n = spec.n;
  switch (spec.kind) {
    case FamilyKind::kSimplicial:
    case FamilyKind::kHyperoctahedral: {
      if (n < 2) throw std::invalid_argument("builtin families need n >= 2");
      bool simp = spec.kind == FamilyKind::kSimplicial;
      fam.polytope = simp ? simplex_polytope(n) : cross_polytope(n);
      fam.g = IntLaurent(n);
      for (const auto& v : fam.polytope.vertices()) fam.g.add(v, Integer(1));
      fam.symmetry_order = simp ? factorial(static_cast<unsigned>(n + 1))
                                : ipow(2, n) * factorial(static_cast<unsigned>(n));
      fam.df0 = simp ? Integer(1) : factorial(static_cast<unsigned>(n));
      break;
    }
    case FamilyKind::kCustom: {
      if (n < 1) throw std::invalid_argument("custom family needs n >= 1");
      std::vector<Exponent> support;
      for (const auto& [u, c] : spec.custom_g.terms()) support.push_back(u);
      std::string problem = reflexivity_problem(support, spec.custom_facets);
      if (!problem.empty()) throw PolytopeError("custom polytope is not reflexive: " + problem);
      fam.polytope = Polytope(n, vertices_from_facets(support, spec.custom_facets), spec.custom_facets);
      fam.g = spec.custom_g;
      fam.symmetry_order = 1;
      fam.df0 = 1;
      break;
    }
  }
  return fam;
}

namespace {

QSeries ct_series(const IntLaurent& g, const Polytope* P, std::size_t order) {
  std::size_t n = g.dimension();
  std::vector<Rational> c(order, Rational(0));
  IntLaurent cur = IntLaurent::monomial(zero_exponent(n), Integer(1));
  for (std::size_t m = 0; m < order; ++m) {
    c[m] = Rational(cur.coefficient(zero_exponent(n), Integer(0)));
    if (m + 1 == order) break;
    int remaining = static_cast<int>(order - 2 - m);
    std::function<bool(const Exponent&)> keep = nullptr;
    if (P) {
      keep = [&](const Exponent& u) {
        Exponent neg(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
        return P->degree(neg) <= remaining;
      };
    }
    cur = cur.multiply(g, keep);
  }
  return QSeries(c, order, Rational(0));
}

}  // namespace

QSeries constant_term_series(const IntLaurent& g, const Polytope& P, std::size_t order) {
  return ct_series(g, &P, order);
}

QSeries constant_term_series(const IntLaurent& g, std::size_t order) { return ct_series(g, nullptr, order); }

bool is_admissible(const SeriesLaurent& a, int k, const Polytope& P, int tpow) {
  for (const auto& [u, c] : a.terms()) {
    int d = P.degree(u);
    if (d > k) return false;
    for (std::size_t j = 0; j < c.order(); ++j)
      if (c[j] != 0 && static_cast<int>(j) < tpow * d) return false;
  }
  return true;
}

}  // namespace cyint
