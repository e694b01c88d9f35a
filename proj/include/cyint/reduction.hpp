#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyint/diffop.hpp"
#include "cyint/forms.hpp"

namespace cyint {

class ReductionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficients c_k(tau) of k!/f^(k+1), k = 0, 1, ...; tau = t^tpow of the denominator.
using PoleCombination = std::vector<RationalPoly>;

/// Class sum_j b_j theta^j(1/f), j < n.
struct ReducedVector {
  std::vector<QSeries> b;
  std::size_t order() const;
};

/// Griffiths-Dwork reduction for the builtin families, with memoized reduction tables.
class Reducer {
 public:
  explicit Reducer(const Family& fam);

  const Family& family() const { return fam_; }
  std::size_t dimension() const { return fam_.dimension(); }

  /// Class of m! tau^deg(u) x^u / f^(m+1) for deg(u) <= m. Hyperoctahedral monomials are averaged over
  /// the symmetry group first.
  PoleCombination reduce_monomial(int m, const Exponent& u);

  /// Exact operator with polynomial coefficients, leading coefficient 1 at tau = 0, annihilating 1/f mod dO_f.
  const ThetaOperator& picard_fuchs();

  /// (theta+1)...(theta+k)(1/f) on the basis theta^i(1/f), i < n, as tau-series to `order`.
  std::vector<QSeries> pochhammer_row(std::size_t k, std::size_t order);

  /// Reduces a form over f (tpow = 1) or f^sigma (tpow = p). Hyperoctahedral inputs must be symmetric unless
  /// `symmetrize` is set.
  ReducedVector reduce(const AdmissibleForm& form, bool symmetrize = false);

  /// theta acting on a class, rewriting theta^n(1/f) with the Picard-Fuchs relation; tau = t.
  ReducedVector theta(const ReducedVector& v);

 private:
  PoleCombination reduce_E(int m, const std::vector<int>& w);
  PoleCombination reduce_H(int m, std::vector<int> a);
  PoleCombination reduce_T(int m, int r);
  std::vector<QSeries> theta_step(const std::vector<QSeries>& v, const std::vector<QSeries>& a) const;
  const std::vector<QSeries>& monic_coefficients(std::size_t order);

  Family fam_;
  bool simplicial_;
  std::map<std::pair<int, std::vector<int>>, PoleCombination> memo_E_, memo_H_;
  std::map<std::pair<int, int>, PoleCombination> memo_T_;
  std::optional<ThetaOperator> pf_;
  std::size_t monic_order_ = 0;
  std::vector<QSeries> monic_;
  std::size_t rows_order_ = 0;
  std::vector<std::vector<QSeries>> rows_;
};

ReducedVector reduce_simplicial(const AdmissibleForm& form, std::size_t n);
ReducedVector reduce_hyperoctahedral(const AdmissibleForm& form, std::size_t n, bool symmetrize = false);

/// Derived operator, verified against the constant-term series and by reducing L(1/f) to zero modulo t^M.
ThetaOperator derive_picard_fuchs(const Family& fam, std::size_t M);

/// Invariance of every numerator under sign changes and permutations of the variables.
bool is_hyperoctahedral_symmetric(const AdmissibleForm& form);

/// sum_j b_j theta^j(F), the image of a class under the period map when F = c_0(1/f).
QSeries evaluate_class(const ReducedVector& v, const QSeries& F0);

/// Polynomial arithmetic on RationalPoly.
RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_scale(const RationalPoly& a, const Rational& c);
RationalPoly poly_shift(const RationalPoly& a, std::size_t k);
/// c(t^tpow) as a series to `order`.
QSeries poly_series(const RationalPoly& c, std::size_t order, int tpow = 1);

}  // namespace cyint
