#include "cyint/diffop.hpp"

#include <sstream>

namespace cyint {

namespace {

// Arithmetic in Q[eps]/eps^n.
RationalPoly eps_mul(const RationalPoly& a, const RationalPoly& b, std::size_t n) {
  RationalPoly r(n, Rational(0));
  for (std::size_t i = 0; i < std::min(n, a.size()); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RationalPoly eps_inverse(const RationalPoly& a, std::size_t n) {
  RationalPoly r(n, Rational(0));
  r[0] = 1 / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) acc += a[i] * r[k - i];
    r[k] = -acc * r[0];
  }
  return r;
}

std::string poly_str(const RationalPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p[m] == 0) continue;
    if (!first) os << (p[m] > 0 ? " + " : " - ");
    else if (p[m] < 0) os << "-";
    Rational c = abs(p[m]);
    if (c != 1 || m == 0) os << c.get_str();
    if (m > 0) os << (c != 1 ? "*" : "") << "t" << (m > 1 ? "^" + std::to_string(m) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

Rational evaluate(const RationalPoly& P, const Rational& x) {
  Rational r = 0;
  for (std::size_t i = P.size(); i-- > 0;) r = r * x + P[i];
  return r;
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

RationalPoly shift_polynomial(const RationalPoly& P, const Rational& x, std::size_t n) {
  // Horner in (x + eps), truncated at eps^n.
  RationalPoly r(n, Rational(0));
  RationalPoly lin(n, Rational(0));
  lin[0] = x;
  if (n > 1) lin[1] = 1;
  for (std::size_t i = P.size(); i-- > 0;) {
    r = eps_mul(r, lin, n);
    r[0] += P[i];
  }
  return r;
}

ThetaOperator::ThetaOperator(std::vector<RationalPoly> coeffs, std::size_t known_order)
    : coeffs_(std::move(coeffs)), known_order_(known_order) {
  if (coeffs_.size() < 2) throw OperatorError("operator order must be at least 1");
  for (auto& a : coeffs_) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  if (coeffs_.back().empty()) throw OperatorError("leading coefficient a_n is zero");
}

bool ThetaOperator::is_monic() const {
  const auto& a = coeffs_.back();
  return a.size() == 1 && a[0] == 1;
}

Rational ThetaOperator::coeff(std::size_t i, std::size_t m) const {
  const auto& a = coeffs_.at(i);
  return m < a.size() ? a[m] : Rational(0);
}

QSeries ThetaOperator::coefficient_series(std::size_t i, std::size_t M) const {
  if (M > known_order_) throw OperatorError("operator known only to order " + std::to_string(known_order_));
  return QSeries::from_rationals(coeffs_.at(i), M, Rational(0));
}

ThetaOperator ThetaOperator::monic(std::size_t M) const {
  if (is_monic()) return *this;
  const auto& lead = coeffs_.back();
  if (lead[0] == 0) throw OperatorError("leading coefficient vanishes at t = 0");
  if (lead.size() == 1) {
    std::vector<RationalPoly> out = coeffs_;
    for (auto& a : out)
      for (auto& c : a) c /= lead[0];
    return ThetaOperator(out, known_order_);
  }
  std::size_t m = std::min(M, known_order_);
  QSeries inv = coefficient_series(order(), m).inverse();
  std::vector<RationalPoly> out;
  for (std::size_t i = 0; i < order(); ++i) out.push_back((coefficient_series(i, m) * inv).coeffs());
  out.push_back({Rational(1)});
  return ThetaOperator(out, m);
}

RationalPoly ThetaOperator::theta_polynomial(std::size_t m) const {
  if (m >= known_order_) throw OperatorError("operator coefficient beyond known order");
  RationalPoly P(coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) P[i] = coeff(i, m);
  return P;
}

QLogSeries ThetaOperator::apply(const QLogSeries& y) const {
  std::size_t M = y.order();
  QLogSeries acc(QSeries(M, Rational(0)));
  QLogSeries power = y;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = theta(power);
    if (coeffs_[i].empty()) continue;
    acc = acc + coefficient_series(i, M) * power;
  }
  return acc;
}

QSeries ThetaOperator::apply(const QSeries& y) const { return apply(QLogSeries(y)).part(0); }

std::string ThetaOperator::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].empty()) continue;
    if (!first) os << " + ";
    os << "(" << poly_str(coeffs_[i]) << ")";
    if (i > 0) os << "*theta" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (known_order_ != kExact) os << " + O(t^" << known_order_ << ")";
  return os.str();
}

ThetaOperator operator_from_theta_polys(const std::vector<RationalPoly>& p_of_m) {
  std::size_t n = 0;
  for (const auto& P : p_of_m)
    if (!P.empty()) n = std::max(n, P.size() - 1);
  std::vector<RationalPoly> coeffs(n + 1, RationalPoly(p_of_m.size(), Rational(0)));
  for (std::size_t m = 0; m < p_of_m.size(); ++m)
    for (std::size_t i = 0; i < p_of_m[m].size(); ++i) coeffs[i][m] = p_of_m[m][i];
  return ThetaOperator(coeffs);
}

ThetaOperator quintic_operator() {
  RationalPoly prod = {Rational(-5)};
  for (int k = 1; k <= 4; ++k) prod = poly_mul(prod, {Rational(k), Rational(5)});
  RationalPoly lead(5, Rational(0));
  lead[4] = 1;
  return operator_from_theta_polys({lead, prod});
}

ThetaOperator simplicial_operator(std::size_t n) {
  if (n < 1) throw OperatorError("simplicial dimension must be >= 1");
  RationalPoly prod = {-Rational(ipow(static_cast<std::int64_t>(n + 1), n + 1))};
  for (std::size_t k = 1; k <= n; ++k) prod = poly_mul(prod, {Rational(static_cast<long>(k)), Rational(1)});
  std::vector<RationalPoly> p(n + 2);
  p[0] = RationalPoly(n + 1, Rational(0));
  p[0][n] = 1;
  p[n + 1] = prod;
  return operator_from_theta_polys(p);
}

ThetaOperator diagonal4_operator() {
  auto q = [](long c2, long c4) { return RationalPoly{0, 0, Rational(c2), 0, Rational(c4)}; };
  return ThetaOperator({q(-128, 128 * 96), q(-32 * 13, 32 * 896), q(-16 * 33, 16 * 1472), q(-64 * 5, 64 * 128),
                        RationalPoly{1, 0, -80, 0, 1024}});
}

bool is_mum(const ThetaOperator& L) {
  ThetaOperator m = L.monic(1);
  for (std::size_t i = 0; i < m.order(); ++i)
    if (m.coeff(i, 0) != 0) return false;
  return true;
}

bool is_self_dual(const ThetaOperator& L, std::size_t M) {
  if (L.order() != 4) throw OperatorError("self-duality is defined for order 4");
  if (M > L.known_order()) throw OperatorError("insufficient truncation to decide self-duality");
  ThetaOperator m = L.monic(M);
  QSeries a1 = m.coefficient_series(1, M), a2 = m.coefficient_series(2, M), a3 = m.coefficient_series(3, M);
  QSeries ta3 = theta(a3);
  QSeries rhs = Rational(1, 2) * (a2 * a3) - Rational(1, 8) * (a3 * a3 * a3) + theta(a2) -
                Rational(3, 4) * (a3 * ta3) - Rational(1, 2) * theta(ta3);
  return (a1 - rhs).is_zero();
}

QLogSeries FrobeniusBasis::solution(std::size_t i) const {
  std::vector<QSeries> parts;
  Rational fact = 1;
  for (std::size_t j = 0; j <= i; ++j) {
    if (j > 0) fact *= static_cast<long>(j);
    parts.push_back(F.at(i - j) * (1 / fact));
  }
  return QLogSeries(parts);
}

FrobeniusBasis frobenius_basis(const ThetaOperator& L, std::size_t M) {
  if (M == 0) throw OperatorError("truncation must be positive");
  ThetaOperator m = L.monic(M);
  if (m.known_order() < M) throw OperatorError("operator known to fewer than M terms");
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i)
    if (m.coeff(i, 0) != 0) throw OperatorError("operator is not of MUM type");
  std::vector<RationalPoly> P(M);
  for (std::size_t j = 1; j < M; ++j) P[j] = m.theta_polynomial(j);
  RationalPoly theta_n(n + 1, Rational(0));
  theta_n[n] = 1;

  // c_m(eps) with (m+eps)^n c_m = -sum_j P_j(m-j+eps) c_{m-j}.
  std::vector<RationalPoly> c(M);
  c[0] = RationalPoly(n, Rational(0));
  c[0][0] = 1;
  for (std::size_t k = 1; k < M; ++k) {
    RationalPoly rhs(n, Rational(0));
    for (std::size_t j = 1; j <= k; ++j) {
      bool empty = true;
      for (const auto& x : P[j])
        if (x != 0) empty = false;
      if (empty) continue;
      RationalPoly term = eps_mul(shift_polynomial(P[j], Rational(static_cast<long>(k - j)), n), c[k - j], n);
      for (std::size_t e = 0; e < n; ++e) rhs[e] -= term[e];
    }
    RationalPoly lead = shift_polynomial(theta_n, Rational(static_cast<long>(k)), n);
    c[k] = eps_mul(rhs, eps_inverse(lead, n), n);
  }
  FrobeniusBasis basis;
  basis.truncation = M;
  for (std::size_t l = 0; l < n; ++l) {
    QSeries F(M, Rational(0));
    for (std::size_t k = 0; k < M; ++k) F[k] = c[k][l];
    basis.F.push_back(F);
  }
  return basis;
}

}  // namespace cyint
