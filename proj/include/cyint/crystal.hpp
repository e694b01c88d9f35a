#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "cyint/reduction.hpp"
#include "cyint/zmod.hpp"

namespace cyint {

using ZSeries = TruncatedSeries<ZmodPk>;

/// Working precisions derived from the requested (N, M).
struct CrystalPrecision {
  std::size_t N = 3, M = 10;
  /// N' = N + n extra p-digits, M' = M + 2 extra t-orders.
  std::size_t N_work = 0, M_work = 0;
  /// Largest k with ord_p(p^k / k!) < N'.
  std::size_t K_max = 0;
};

/// Largest k with k - ord_p(k!) < N'; all later terms vanish mod p^N'.
std::size_t cartier_terms(std::int64_t p, std::size_t N_work);
CrystalPrecision crystal_precision(const Family& fam, std::int64_t p, std::size_t N, std::size_t M);

/// sum_{k <= K} (p^k/k!) k! Q_k / (f^sigma)^(k+1) with Q_k = Cartier(G^k f^(p-1)), G = (f^sigma(x^p) - f^p)/p.
struct CartierExpansion {
  std::int64_t p = 0;
  CrystalPrecision prec;
  struct Coefficient {
    int degree = 0;
    /// Q_k[w] = t^(p deg w) sum_e a_e t^e with residues a_e mod p^(E0 - k), e < M'.
    std::vector<std::uint64_t> a;
  };
  std::vector<std::map<Exponent, Coefficient>> Q;
  /// Exponent E0 of the starting modulus.
  std::size_t E0 = 0;

  std::uint64_t modulus(std::size_t k) const;
  /// Integer lift as a form over f^sigma (tpow = p), congruent to the expansion mod p^N'.
  AdmissibleForm to_form(std::size_t n) const;
};

/// Throws std::invalid_argument when K_max override is below the required bound or p violates the hypotheses.
CartierExpansion cartier_expansion(const Family& fam, std::int64_t p, std::size_t N, std::size_t M,
                                   std::size_t K_max_override = 0);

struct FrobeniusStructure {
  std::int64_t p = 0;
  std::size_t N = 0, M = 0;
  CrystalPrecision prec;
  /// lambda_i mod p^(N+i), as p-adic series to t^M.
  std::vector<PSeries> lambda;
  /// alpha_i = p^-i lambda_i(0) mod p^N.
  std::vector<PadicScalar> alpha;
  /// A_i = lambda_i / p^i mod p^N.
  std::vector<PSeries> A;
  /// min ord_p of the coefficients of lambda_i (from the working-precision residues).
  std::vector<std::int64_t> lambda_valuations;
};

FrobeniusStructure frobenius_structure(const Family& fam, std::int64_t p, std::size_t N, std::size_t M,
                                       std::size_t K_max_override = 0);

/// sum_i A_i theta^i[F_0(t^p)] == F_0(t) mod (p^N, t^M).
bool verify_frobenius_equation(const FrobeniusStructure& fs, const QSeries& F0, std::int64_t p, std::size_t N,
                               std::size_t M);

struct ActionCheck {
  bool ok = false;
  /// The residual vanishes modulo p^effective_precision; below N when the basis has p in denominators.
  std::int64_t effective_precision = 0;
  std::vector<std::int64_t> residual_valuations;
};

/// A(y_i^sigma) - p^i sum_{j<=i} alpha_j y_(i-j) for the Frobenius basis, i < n.
ActionCheck frobenius_action_check(const FrobeniusStructure& fs, const FrobeniusBasis& basis);

}  // namespace cyint
