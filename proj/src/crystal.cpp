#include "cyint/crystal.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyint/excess.hpp"

namespace cyint {

namespace {

std::int64_t factorial_valuation(std::size_t k, std::int64_t p) {
  std::int64_t v = 0;
  for (std::uint64_t q = p; q <= k; q *= p) v += static_cast<std::int64_t>(k / q);
  return v;
}

std::uint64_t upow(std::uint64_t p, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > (std::uint64_t(1) << 62) / p) throw std::overflow_error("modulus exceeds 2^62");
    r *= p;
  }
  return r;
}

void check_prime(const Family& fam, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (p <= static_cast<std::int64_t>(fam.dimension())) throw std::invalid_argument("p must exceed n");
}

void check_hypotheses(const Family& fam, std::int64_t p) {
  check_prime(fam, p);
  if (!fam.builtin()) throw std::invalid_argument("Frobenius structure needs a builtin family");
  if ((fam.symmetry_order * fam.df0) % p == 0) throw std::invalid_argument("p divides the symmetry order or D_f(0)");
}

std::int64_t residue_valuation(std::uint64_t x, std::int64_t p, std::int64_t cap) {
  if (x == 0) return cap;
  std::int64_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return std::min(v, cap);
}

}  // namespace

std::size_t cartier_terms(std::int64_t p, std::size_t N_work) {
  // ord_p(p^k/k!) >= k(p-2)/(p-1): nothing past k(p-2) >= N'(p-1) can matter.
  std::size_t bound = (N_work * (p - 1) + (p - 3)) / (p - 2) + 1;
  std::size_t K = 0;
  for (std::size_t k = 0; k <= bound; ++k)
    if (static_cast<std::int64_t>(k) - factorial_valuation(k, p) < static_cast<std::int64_t>(N_work)) K = k;
  return K;
}

CrystalPrecision crystal_precision(const Family& fam, std::int64_t p, std::size_t N, std::size_t M) {
  if (N < 1 || M < 1) throw std::invalid_argument("N and M must be positive");
  CrystalPrecision c;
  c.N = N;
  c.M = M;
  c.N_work = N + fam.dimension();
  c.M_work = M + 2;
  c.K_max = cartier_terms(p, c.N_work);
  return c;
}

std::uint64_t CartierExpansion::modulus(std::size_t k) const { return upow(p, E0 - k); }

AdmissibleForm CartierExpansion::to_form(std::size_t n) const {
  std::size_t Mw = prec.M_work;
  AdmissibleForm out(n, Mw, static_cast<int>(p));
  for (std::size_t k = 0; k < Q.size(); ++k) {
    Rational ck = Rational(ipow(p, k)) / Rational(factorial(k));
    SeriesLaurent num(n);
    for (const auto& [w, c] : Q[k]) {
      std::size_t shift = static_cast<std::size_t>(p * c.degree);
      QSeries s(Mw + shift, Rational(0));
      for (std::size_t e = 0; e < c.a.size(); ++e) s[e + shift] = ck * Rational(Integer(static_cast<unsigned long>(c.a[e])));
      num.add(w, s);
    }
    out.add_term(static_cast<int>(k) + 1, num);
  }
  return out;
}

CartierExpansion cartier_expansion(const Family& fam, std::int64_t p, std::size_t N, std::size_t M,
                                   std::size_t K_max_override) {
  check_prime(fam, p);
  CartierExpansion ce;
  ce.p = p;
  ce.prec = crystal_precision(fam, p, N, M);
  if (K_max_override) {
    if (K_max_override < ce.prec.K_max)
      throw std::invalid_argument("K_max " + std::to_string(K_max_override) + " is below the required bound " +
                                  std::to_string(ce.prec.K_max));
    ce.prec.K_max = K_max_override;
  }
  std::size_t K = ce.prec.K_max;
  int levels = static_cast<int>(ce.prec.M_work);
  // H_k needs precision p^(N' - ord(c_k) + k) = p^(N' + ord_p(k!)).
  ce.E0 = ce.prec.N_work + static_cast<std::size_t>(factorial_valuation(K, p));
  std::uint64_t m = upow(p, ce.E0);

  const Polytope& P = fam.polytope;
  std::vector<Exponent> steps;
  for (const auto& [u, c] : fam.g.terms()) steps.push_back(u);
  int ip = static_cast<int>(p);
  LatticeIndex idx(P, steps, ip * static_cast<int>(K + 1));
  using ModExcess = ExcessPoly<ModRing>;
  ModExcess H = ModExcess::one(idx, levels, ModRing{m});
  for (int i = 0; i + 1 < ip; ++i) H = H.times_f(fam.g, 1, 1);

  for (std::size_t k = 0;; ++k) {
    // Keep exponents divisible by p; Q_k[w] = H_k[p w].
    std::map<Exponent, CartierExpansion::Coefficient> Qk;
    for (const auto& w : P.lattice_points(static_cast<int>(k))) {
      std::int64_t pos = idx.find(ip * w);
      if (pos < 0) continue;
      int d = P.degree(w);
      int shift = ip * d - idx.degree(pos);
      CartierExpansion::Coefficient c;
      c.degree = d;
      c.a.assign(levels, 0);
      bool any = false;
      for (int e = 0; e < levels; ++e) {
        int src = e + shift;
        if (src < 0) continue;
        if (src >= levels) break;
        c.a[e] = H.at(pos, src);
        any = any || c.a[e] != 0;
      }
      // Below t^(p deg w) nothing may survive: admissibility with respect to t^p.
      for (int e = 0; e < std::min(-shift, levels); ++e)
        if (H.at(pos, e) != 0) throw std::logic_error("Q_k is not admissible with respect to t^p");
      if (any) Qk.emplace(w, std::move(c));
    }
    ce.Q.push_back(std::move(Qk));
    if (k == K) break;
    // H_(k+1) = (f^s(x^p) H_k - f^p H_k) / p.
    ModExcess S = H.times_f(fam.g, ip, ip);
    ModExcess F = H;
    for (int i = 0; i < ip; ++i) F = F.times_f(fam.g, 1, 1);
    const ModRing& ring = H.ring();
    std::uint64_t next = ring.m / p;
    auto& out = S.raw();
    const auto& sub = F.raw();
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::uint64_t v = ring.sub(out[i], sub[i]);
      if (v % p != 0) throw std::logic_error("G does not have p-integral coefficients");
      out[i] = v / p;
    }
    S.set_ring(ModRing{next});
    H = std::move(S);
  }
  return ce;
}

FrobeniusStructure frobenius_structure(const Family& fam, std::int64_t p, std::size_t N, std::size_t M,
                                       std::size_t K_max_override) {
  check_hypotheses(fam, p);
  CartierExpansion ce = cartier_expansion(fam, p, N, M, K_max_override);
  const CrystalPrecision& pr = ce.prec;
  std::size_t n = fam.dimension(), Mw = pr.M_work, Nw = pr.N_work;
  PrimePowerModulus mod(p, static_cast<std::int64_t>(Nw));
  ZmodPk zero(mod, 0);
  Reducer red(fam);
  std::size_t tau_order = Mw / p + 1;

  std::vector<ZSeries> lambda(n, ZSeries(Mw, zero));
  for (std::size_t k = 0; k < ce.Q.size(); ++k) {
    std::int64_t v = static_cast<std::int64_t>(k) - factorial_valuation(k, p);
    if (v >= static_cast<std::int64_t>(Nw)) continue;
    Rational unit = Rational(ipow(p, k)) / Rational(factorial(k)) / Rational(ipow(p, v));
    ZmodPk ck(mod, mod.mul(mod.from_rational(unit), upow(p, v)));
    std::uint64_t res_mod = ce.modulus(k);
    for (const auto& [w, c] : ce.Q[k]) {
      ZSeries a(Mw, zero);
      for (std::size_t e = 0; e < c.a.size() && e < Mw; ++e) {
        // c.a[e] is known mod p^(E0-k); times p^v it is known mod p^N'.
        a[e] = ZmodPk(mod, c.a[e] % res_mod);
      }
      a = a * ck;
      PoleCombination comb = red.reduce_monomial(static_cast<int>(k), w);
      for (std::size_t i = 0; i < n; ++i) {
        QSeries R(tau_order, Rational(0));
        for (std::size_t j = 0; j < comb.size(); ++j) {
          if (comb[j].empty()) continue;
          R += poly_series(comb[j], tau_order) * red.pochhammer_row(j, tau_order)[i];
        }
        ZSeries Rt(Mw, zero);
        for (std::size_t s = 0; s < tau_order && s * p < Mw; ++s) Rt[s * p] = embed(zero, R[s]);
        lambda[i] += a * Rt;
      }
    }
  }

  FrobeniusStructure fs;
  fs.p = p;
  fs.N = N;
  fs.M = M;
  fs.prec = pr;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t minv = static_cast<std::int64_t>(Nw);
    for (std::size_t j = 0; j < M; ++j)
      minv = std::min(minv, residue_valuation(lambda[i][j].value(), p, static_cast<std::int64_t>(Nw)));
    fs.lambda_valuations.push_back(minv);
    for (std::size_t j = 0; j < Mw; ++j)
      if (residue_valuation(lambda[i][j].value(), p, static_cast<std::int64_t>(Nw)) < static_cast<std::int64_t>(i))
        throw std::logic_error("lambda_" + std::to_string(i) + " is not divisible by p^" + std::to_string(i));
    std::vector<PadicScalar> lam, A;
    for (std::size_t j = 0; j < M; ++j) {
      lam.push_back(lambda[i][j].reduce_to(static_cast<std::uint32_t>(N + i)).to_padic());
      A.push_back(lambda[i][j].divide_by_prime_power(static_cast<std::uint32_t>(i))
                      .reduce_to(static_cast<std::uint32_t>(N))
                      .to_padic());
    }
    fs.lambda.emplace_back(lam, M, PadicScalar::zero(p, static_cast<std::int64_t>(N + i)));
    fs.A.emplace_back(A, M, PadicScalar::zero(p, static_cast<std::int64_t>(N)));
    fs.alpha.push_back(A.front());
  }
  return fs;
}

bool verify_frobenius_equation(const FrobeniusStructure& fs, const QSeries& F0, std::int64_t p, std::size_t N,
                               std::size_t M) {
  if (p != fs.p) throw std::invalid_argument("prime does not match the Frobenius structure");
  if (N > fs.N || M > fs.M || M > F0.order()) throw std::invalid_argument("requested precision exceeds the data");
  PrimePowerModulus mod(p, static_cast<std::int64_t>(N));
  ZmodPk zero(mod, 0);
  auto to_z = [&](const QSeries& s) {
    ZSeries z(M, zero);
    for (std::size_t j = 0; j < M; ++j) z[j] = embed(zero, s[j]);
    return z;
  };
  ZSeries target = to_z(F0);
  ZSeries power = frobenius_substitute(target, static_cast<std::size_t>(p));
  ZSeries acc(M, zero);
  for (std::size_t i = 0; i < fs.A.size(); ++i) {
    if (i > 0) power = theta(power);
    ZSeries Ai(M, zero);
    for (std::size_t j = 0; j < M; ++j) Ai[j] = embed(zero, fs.A[i][j].lift());
    acc += Ai * power;
  }
  for (std::size_t j = 0; j < M; ++j)
    if (!(acc[j] == target[j])) return false;
  return true;
}

ActionCheck frobenius_action_check(const FrobeniusStructure& fs, const FrobeniusBasis& basis) {
  std::int64_t p = fs.p;
  std::size_t M = std::min(fs.M, basis.truncation), n = fs.A.size();
  if (basis.F.size() < n) throw std::invalid_argument("basis has fewer solutions than the operator order");
  std::vector<QSeries> A;
  for (const auto& a : fs.A) {
    std::vector<Rational> c;
    for (std::size_t j = 0; j < M; ++j) c.push_back(a[j].lift());
    A.emplace_back(c, M, Rational(0));
  }
  FrobeniusBasis b = basis;
  for (auto& F : b.F) F = F.truncate(M);
  ActionCheck out;
  std::int64_t floor_v = 0;
  auto track = [&](const QLogSeries& y) {
    for (const auto& part : y.parts())
      for (std::size_t j = 0; j < part.order(); ++j)
        if (part[j] != 0) floor_v = std::min(floor_v, valuation(part[j], p));
  };
  std::vector<QLogSeries> residuals;
  for (std::size_t i = 0; i < n; ++i) {
    QLogSeries ys = frobenius_substitute(b.solution(i), static_cast<std::size_t>(p));
    QLogSeries acc(QSeries(M, Rational(0)));
    QLogSeries power = ys;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) power = theta(power);
      track(power);
      acc = acc + A[k] * power;
    }
    Rational pi(ipow(p, i));
    for (std::size_t j = 0; j <= i; ++j) {
      QLogSeries y = b.solution(i - j);
      track(y);
      acc = acc - QSeries::constant(pi * fs.alpha[j].lift(), M) * y;
    }
    residuals.push_back(acc);
  }
  out.effective_precision = static_cast<std::int64_t>(fs.N) + floor_v;
  out.ok = true;
  for (const auto& r : residuals) {
    std::int64_t v = kInfiniteValuation;
    for (const auto& part : r.parts())
      for (std::size_t j = 0; j < part.order(); ++j)
        if (part[j] != 0) v = std::min(v, valuation(part[j], p));
    out.residual_valuations.push_back(v);
    if (v < out.effective_precision) out.ok = false;
  }
  return out;
}

}  // namespace cyint
