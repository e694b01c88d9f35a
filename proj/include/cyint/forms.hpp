#pragma once

#include <cstddef>
#include <vector>

#include "cyint/family.hpp"

namespace cyint {

/// One summand (m-1)! * A / f^m.
struct FormTerm {
  int pole = 1;
  SeriesLaurent numerator;
};

/// Sum of (m-1)! A_m / f^m with f = 1 - t^tpow g; tpow = p gives the Frobenius-twisted denominator f^sigma.
class AdmissibleForm {
 public:
  AdmissibleForm() = default;
  AdmissibleForm(std::size_t n, std::size_t order, int tpow = 1) : n_(n), order_(order), tpow_(tpow) {}

  /// The form 1/f.
  static AdmissibleForm inverse_f(std::size_t n, std::size_t order, int tpow = 1);
  /// (m-1)! c t^j x^u / f^m as a single term.
  static AdmissibleForm monomial(std::size_t n, std::size_t order, int pole, const Exponent& u, std::size_t tdeg,
                                 const Rational& c, int tpow = 1);

  std::size_t dimension() const { return n_; }
  std::size_t order() const { return order_; }
  int tpow() const { return tpow_; }
  const std::vector<FormTerm>& terms() const { return terms_; }

  /// Adds (m-1)! A / f^m, merging equal pole orders.
  void add_term(int pole, const SeriesLaurent& numerator);

  AdmissibleForm& operator+=(const AdmissibleForm& o);
  AdmissibleForm scaled(const Rational& c) const;
  AdmissibleForm scaled(const QSeries& c) const;

  /// Every numerator admissible with respect to t^tpow and supported in m*P.
  bool admissible(const Polytope& P) const;

 private:
  std::size_t n_ = 0;
  std::size_t order_ = 0;
  int tpow_ = 1;
  std::vector<FormTerm> terms_;
};

/// t d/dt applied to the form (the denominator depends on t).
AdmissibleForm theta(const AdmissibleForm& w, const IntLaurent& g);
/// x_i d/dx_i applied to the form; the result is exact.
AdmissibleForm theta_i(const AdmissibleForm& w, const IntLaurent& g, std::size_t i);

/// Constant term of the t-adic expansion; kills every theta_i(form).
QSeries period_map(const AdmissibleForm& w, const Family& fam, std::size_t order);

}  // namespace cyint
