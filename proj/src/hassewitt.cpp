#include "cyint/hassewitt.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "cyint/excess.hpp"

namespace cyint {

namespace {

void check_k(int k, int p) {
  if (k < 1 || k >= p) throw std::invalid_argument("Hasse-Witt index k must satisfy 1 <= k < p");
}

std::vector<Exponent> support(const IntLaurent& g) {
  std::vector<Exponent> s;
  for (const auto& [u, c] : g.terms()) s.push_back(u);
  return s;
}

using IntExcess = ExcessPoly<IntRing>;

IntExcess times_f_power(IntExcess x, const IntLaurent& g, int power) {
  for (int i = 0; i < power; ++i) x = x.times_f(g, 1, 1);
  return x;
}

// F^(k) in excess storage with M levels.
IntExcess hw_excess(const Family& fam, const LatticeIndex& idx, int k, int p, int M) {
  const IntLaurent& g = fam.g;
  auto S = [&](const IntExcess& x) { return x.times_f(g, p, p); };
  auto D = [&](const IntExcess& x) {
    IntExcess a = S(x), b = times_f_power(x, g, p);
    for (std::size_t i = 0; i < a.raw().size(); ++i) a.raw()[i] -= b.raw()[i];
    return a;
  };
  IntExcess B = IntExcess::one(idx, M, IntRing{});
  IntExcess P = B;
  for (int j = 1; j < k; ++j) {
    P = D(P);
    B = S(B);
    for (std::size_t i = 0; i < B.raw().size(); ++i) B.raw()[i] += P.raw()[i];
  }
  return times_f_power(B, g, p - k);
}

}  // namespace

std::vector<std::vector<Integer>> HWReport::at_zero() const {
  std::vector<std::vector<Integer>> m(size(), std::vector<Integer>(size()));
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = 0; v < size(); ++v) m[u][v] = entries[u][v].empty() ? Integer(0) : entries[u][v][0];
  return m;
}

SeriesLaurent hw_polynomial(const Family& fam, int k, int p, std::size_t M) {
  check_k(k, p);
  LatticeIndex idx(fam.polytope, support(fam.g), p * k);
  IntExcess F = hw_excess(fam, idx, k, p, static_cast<int>(M));
  SeriesLaurent out(fam.dimension());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    std::vector<Rational> c(M, Rational(0));
    bool any = false;
    for (int e = 0; e < static_cast<int>(M); ++e) {
      std::size_t j = static_cast<std::size_t>(idx.degree(i) + e);
      if (j < M && F.at(i, e) != 0) {
        c[j] = F.at(i, e);
        any = true;
      }
    }
    if (any) out.add(idx.point(i), QSeries(c, M, Rational(0)));
  }
  return out;
}

HWReport hw_matrix(const Family& fam, int k, int p, std::size_t M) {
  check_k(k, p);
  if (M < 1) throw std::invalid_argument("hw_matrix: truncation must be at least 1");
  const Polytope& P = fam.polytope;
  LatticeIndex idx(P, support(fam.g), p * k);
  IntExcess F = hw_excess(fam, idx, k, p, static_cast<int>(M));
  HWReport r;
  r.k = k;
  r.p = p;
  r.M = M;
  r.points = P.lattice_points(k);
  std::size_t sz = r.points.size();
  r.entries.assign(sz, std::vector<std::vector<Integer>>(sz, std::vector<Integer>(M)));
  for (std::size_t a = 0; a < sz; ++a)
    for (std::size_t b = 0; b < sz; ++b) {
      const Exponent& u = r.points[a];
      const Exponent& v = r.points[b];
      Exponent w = p * v - u;
      std::int64_t pos = idx.find(w);
      if (pos < 0) continue;
      int shift = p * P.degree(v) - P.degree(u) - idx.degree(pos);
      // Coefficients of t-order below p deg v - deg u would need negative excess.
      if (shift > 0) {
        for (int e = 0; e < std::min<int>(shift, static_cast<int>(M)); ++e)
          if (F.at(pos, e) != 0) throw std::logic_error("Hasse-Witt entry is not divisible by the expected t-power");
      }
      for (std::size_t i = 0; i < M; ++i) {
        long e = static_cast<long>(i) + shift;
        if (e >= 0 && e < static_cast<long>(M)) r.entries[a][b][i] = F.at(pos, static_cast<int>(e));
      }
    }
  r.L_k = L_of_k(P, k);
  r.det_at_0 = bareiss_determinant(r.at_zero());
  r.det_valuation_at_0 = r.det_at_0 == 0 ? kInfiniteValuation : valuation(r.det_at_0, p);
  r.hw_unit = r.det_at_0 != 0 && r.det_valuation_at_0 == r.L_k;
  return r;
}

long L_of_k_by_counts(const Polytope& P, int k) {
  long total = 0, top = static_cast<long>(P.lattice_points(k).size());
  for (int l = 1; l <= k; ++l) total += top - static_cast<long>(P.lattice_points(l).size());
  return total;
}

long L_of_k(const Polytope& P, int k) {
  if (k < 1) throw std::invalid_argument("L(k) needs k >= 1");
  long total = 0;
  for (const auto& u : P.lattice_points(k)) {
    int d = P.degree(u);
    if (d > 0) total += d - 1;
  }
  if (total != L_of_k_by_counts(P, k)) throw std::logic_error("L(k) formulas disagree");
  return total;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

QSeries hw_determinant_series(const HWReport& r) {
  std::size_t n = r.size(), M = r.M;
  std::vector<std::vector<QSeries>> a(n, std::vector<QSeries>(n, QSeries(M, Rational(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> c(r.entries[i][j].begin(), r.entries[i][j].end());
      a[i][j] = QSeries(c, M, Rational(0));
    }
  QSeries det = QSeries::constant(Rational(1), M);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k][0] == 0) ++piv;
    if (piv == n) throw std::domain_error("determinant series: no unit pivot (det vanishes at t = 0)");
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    QSeries inv = a[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      QSeries factor = a[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return det;
}

bool hw_condition(const Family& fam, int k, int p, std::size_t M, std::vector<HWReport>* reports) {
  check_k(k, p);
  bool ok = true;
  for (int l = 1; l <= k; ++l) {
    HWReport r = hw_matrix(fam, l, p, M);
    ok = ok && r.hw_unit;
    if (reports) reports->push_back(std::move(r));
  }
  return ok;
}

namespace {

IntLaurent power(const IntLaurent& base, int e, std::size_t n) {
  IntLaurent r = IntLaurent::monomial(zero_exponent(n), Integer(1));
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

// F^(k)_h for h = 1 - sum_{w in face} g_w x^w, without the t-parameter.
IntLaurent block_polynomial(const IntLaurent& h_part, int k, int p, std::size_t n) {
  IntLaurent one = IntLaurent::monomial(zero_exponent(n), Integer(1));
  IntLaurent h = one - h_part;
  IntLaurent hs = one - h_part.frobenius_x(p);
  IntLaurent d = hs - power(h, p, n);
  IntLaurent sum(n);
  for (int r = 0; r < k; ++r) sum += power(d, r, n) * power(hs, k - 1 - r, n);
  return power(h, p - k, n) * sum;
}

}  // namespace

HWBlockReport hw_block_check(const Family& fam, int k, int p) {
  check_k(k, p);
  const Polytope& P = fam.polytope;
  std::size_t n = fam.dimension();
  HWReport full = hw_matrix(fam, k, p, 1);
  auto H0 = full.at_zero();
  HWBlockReport out;
  out.k = k;
  out.p = p;
  out.det_full = full.det_at_0;
  out.det_product = 1;
  out.ok = true;
  if (H0[0][0] != 1) out.ok = false;
  for (std::size_t b = 1; b < full.size(); ++b)
    if (H0[b][0] != 0) out.ok = false;
  for (const auto& face : P.faces()) {
    HWBlock blk;
    blk.face = face;
    std::vector<std::size_t> rows;
    for (std::size_t a = 0; a < full.size(); ++a) {
      const Exponent& u = full.points[a];
      if (P.degree(u) == 0) continue;
      if (P.minimal_face(u) == face) {
        blk.points.push_back(u);
        rows.push_back(a);
        blk.expected_valuation += P.degree(u) - 1;
      }
    }
    IntLaurent hp(n);
    for (const auto& w : P.face_lattice_points(face)) hp.add(w, fam.g.coefficient(w, Integer(0)));
    IntLaurent F = block_polynomial(hp, k, p, n);
    std::size_t s = rows.size();
    std::vector<std::vector<Integer>> m(s, std::vector<Integer>(s));
    blk.matches_full = true;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        m[i][j] = F.coefficient(p * blk.points[j] - blk.points[i], Integer(0));
        if (m[i][j] != H0[rows[i]][rows[j]]) blk.matches_full = false;
      }
    blk.det = bareiss_determinant(m);
    blk.valuation = blk.det == 0 ? kInfiniteValuation : valuation(blk.det, p);
    out.det_product *= blk.det;
    if (!blk.matches_full || blk.valuation != blk.expected_valuation) out.ok = false;
    out.blocks.push_back(std::move(blk));
  }
  if (out.det_product != out.det_full) out.ok = false;
  return out;
}

}  // namespace cyint
