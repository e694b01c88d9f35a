#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyint/family.hpp"

namespace cyint {

/// Matrix of time-truncated integer series: entries[u][v][i] = [t^i] H_{u,v}.
using SeriesMatrix = std::vector<std::vector<std::vector<Integer>>>;

struct HWReport {
  int k = 1;
  int p = 3;
  std::size_t M = 1;
  /// Row/column labels: the lattice points of kP in lexicographic order.
  std::vector<Exponent> points;
  SeriesMatrix entries;
  long L_k = 0;
  Integer det_at_0;
  /// kInfiniteValuation when the determinant vanishes at t = 0.
  std::int64_t det_valuation_at_0 = 0;
  bool hw_unit = false;

  std::size_t size() const { return points.size(); }
  std::vector<std::vector<Integer>> at_zero() const;
};

struct HWBlock {
  Face face;
  std::vector<Exponent> points;
  Integer det;
  std::int64_t valuation = 0;
  long expected_valuation = 0;
  /// The block agrees with the corresponding t = 0 submatrix of the full matrix.
  bool matches_full = false;
};

struct HWBlockReport {
  int k = 1;
  int p = 3;
  std::vector<HWBlock> blocks;
  Integer det_full;
  Integer det_product;
  bool ok = false;
};

/// F^(k) = f^(p-k) sum_{r<k} (f^s(x^p) - f^p)^r f^s(x^p)^(k-1-r) with f^s = 1 - t^p g; throws for k outside [1, p).
SeriesLaurent hw_polynomial(const Family& fam, int k, int p, std::size_t M);

/// Throws std::logic_error should a non-divisible entry appear.
HWReport hw_matrix(const Family& fam, int k, int p, std::size_t M);

/// Sum over nonzero points u of kP of (deg u - 1); cross-checked against the shell-count formula.
long L_of_k(const Polytope& P, int k);
/// sum_{l=1..k} (#(kP) - #(lP)).
long L_of_k_by_counts(const Polytope& P, int k);

/// Fraction-free elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> a);

/// det(HW^(l)) as a series modulo t^M, pivoting on entries with nonzero constant term.
QSeries hw_determinant_series(const HWReport& r);

/// All l <= k satisfy v_p(det HW^(l)(0)) = L(l).
bool hw_condition(const Family& fam, int k, int p, std::size_t M, std::vector<HWReport>* reports = nullptr);

/// Face-by-face factorization of det HW^(k) at t = 0 and the per-block valuations.
HWBlockReport hw_block_check(const Family& fam, int k, int p);

}  // namespace cyint
