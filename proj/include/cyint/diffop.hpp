#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cyint/log_series.hpp"
#include "cyint/series.hpp"

namespace cyint {

class OperatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense polynomial in one variable, lowest degree first.
using RationalPoly = std::vector<Rational>;

/// L = sum_i a_i(t) theta^i with a_i given by their t-expansions.
class ThetaOperator {
 public:
  static constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max();

  ThetaOperator() = default;
  /// coeffs[i] holds the t-coefficients of a_i. known_order is the number of
  /// trustworthy t-coefficients (kExact for polynomials).
  explicit ThetaOperator(std::vector<RationalPoly> coeffs, std::size_t known_order = kExact);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<RationalPoly>& coeffs() const { return coeffs_; }
  std::size_t known_order() const { return known_order_; }
  bool is_monic() const;

  /// [t^m] a_i, zero past the stored polynomial.
  Rational coeff(std::size_t i, std::size_t m) const;
  /// a_i as a series to order M.
  QSeries coefficient_series(std::size_t i, std::size_t M) const;

  /// Divides through by a_n; a_n(0) must be nonzero. The result has a_n = 1 and
  /// is exact only when a_n is constant.
  ThetaOperator monic(std::size_t M) const;

  /// P_m(theta) with L = sum_m t^m P_m(theta); valid for m < known order.
  RationalPoly theta_polynomial(std::size_t m) const;

  QLogSeries apply(const QLogSeries& y) const;
  QSeries apply(const QSeries& y) const;

  std::string str() const;

 private:
  std::vector<RationalPoly> coeffs_;
  std::size_t known_order_ = kExact;
};

/// Builds sum_i a_i theta^i from polynomials in theta times t^m: the operator
/// sum_m t^m P_m(theta).
ThetaOperator operator_from_theta_polys(const std::vector<RationalPoly>& p_of_m);

/// theta^4 - 5t(5theta+1)(5theta+2)(5theta+3)(5theta+4).
ThetaOperator quintic_operator();
/// theta^n - ((n+1)t)^(n+1) (theta+1)...(theta+n).
ThetaOperator simplicial_operator(std::size_t n);
/// The order-4 operator of the hyperoctahedral family in dimension 4.
ThetaOperator diagonal4_operator();

/// Lower coefficients vanish at t = 0.
bool is_mum(const ThetaOperator& L);

/// The order-4 coefficient relation for self-duality, checked to order M.
/// Throws OperatorError if the operator is known to fewer than M terms.
bool is_self_dual(const ThetaOperator& L, std::size_t M);

struct FrobeniusBasis {
  std::size_t truncation = 0;
  /// F_0 .. F_{n-1}.
  std::vector<QSeries> F;

  /// y_i = sum_j F_{i-j} (log t)^j / j!.
  QLogSeries solution(std::size_t i) const;
};

/// Normalized solution basis of a MUM operator to order M.
FrobeniusBasis frobenius_basis(const ThetaOperator& L, std::size_t M);

/// P(x + eps) modulo eps^n, as a list of eps-coefficients.
RationalPoly shift_polynomial(const RationalPoly& P, const Rational& x, std::size_t n);

/// Evaluates a polynomial at x.
Rational evaluate(const RationalPoly& P, const Rational& x);

/// Product of polynomials.
RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);

}  // namespace cyint
