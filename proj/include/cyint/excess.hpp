#pragma once

// Dense storage for admissible Laurent polynomials over Q[[t]]-like rings: a
// term t^j x^u is kept at (u, e) with excess e = j - deg(u) >= 0, and terms
// with e at or beyond the number of levels are dropped. Multiplication by an
// admissible factor never lowers the excess, so the truncation is consistent.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cyint/laurent.hpp"
#include "cyint/polytope.hpp"

namespace cyint {

/// Lattice points of degree <= D reachable from 0 by the given steps.
class LatticeIndex {
 public:
  LatticeIndex(const Polytope& P, const std::vector<Exponent>& steps, int max_degree);

  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return n_; }
  int max_degree() const { return max_degree_; }
  const Exponent& point(std::size_t i) const { return points_[i]; }
  int degree(std::size_t i) const { return degree_[i]; }
  /// Index of u, or -1.
  std::int64_t find(const Exponent& u) const;
  /// For each point i, the index of point(i) + shift or -1.
  const std::vector<std::int32_t>& neighbor(const Exponent& shift) const;

 private:
  std::uint64_t key(const Exponent& u, bool& ok) const;

  const Polytope* P_;
  std::size_t n_;
  int max_degree_;
  int bound_;
  std::vector<Exponent> points_;
  std::vector<int> degree_;
  std::unordered_map<std::uint64_t, std::int32_t> lookup_;
  mutable std::map<Exponent, std::vector<std::int32_t>> neighbors_;
};

/// Residues modulo m < 2^62.
struct ModRing {
  using V = std::uint64_t;
  std::uint64_t m;
  V zero() const { return 0; }
  V add(V a, V b) const {
    V r = a + b;
    return r >= m ? r - m : r;
  }
  V sub(V a, V b) const { return a >= b ? a - b : a + m - b; }
  V scalar(const Integer& c) const {
    Integer mm(static_cast<unsigned long>(m));
    Integer x = c % mm;
    if (x < 0) x += mm;
    return x.get_ui();
  }
  V mul(V a, V b) const { return static_cast<V>((static_cast<unsigned __int128>(a) * b) % m); }
};

/// Exact integers.
struct IntRing {
  using V = Integer;
  V zero() const { return 0; }
  V add(const V& a, const V& b) const { return a + b; }
  V sub(const V& a, const V& b) const { return a - b; }
  V scalar(const Integer& c) const { return c; }
  V mul(const V& a, const V& b) const { return a * b; }
};

template <class Ring>
class ExcessPoly {
 public:
  using V = typename Ring::V;

  ExcessPoly(const LatticeIndex& idx, int levels, Ring ring)
      : idx_(&idx), levels_(levels), ring_(ring), data_(idx.size() * levels, ring.zero()) {}

  const LatticeIndex& index() const { return *idx_; }
  int levels() const { return levels_; }
  const Ring& ring() const { return ring_; }
  void set_ring(Ring r) { ring_ = r; }

  V& at(std::size_t point, int e) { return data_[point * levels_ + e]; }
  const V& at(std::size_t point, int e) const { return data_[point * levels_ + e]; }
  std::vector<V>& raw() { return data_; }
  const std::vector<V>& raw() const { return data_; }

  static ExcessPoly one(const LatticeIndex& idx, int levels, Ring ring) {
    ExcessPoly r(idx, levels, ring);
    r.at(idx.find(zero_exponent(idx.dimension())), 0) = ring.scalar(Integer(1));
    return r;
  }

  /// this += c * t^tdeg * x^shift * in.
  void accumulate(const ExcessPoly& in, const Exponent& shift, int tdeg, const Integer& c) {
    const auto& nb = idx_->neighbor(shift);
    bool plus = c == 1, minus = c == -1;
    V cv = ring_.scalar(c);
    for (std::size_t u = 0; u < nb.size(); ++u) {
      std::int32_t v = nb[u];
      if (v < 0) continue;
      int d = tdeg + idx_->degree(u) - idx_->degree(v);
      if (d < 0) throw std::logic_error("excess kernel: factor is not admissible");
      const V* src = &in.data_[u * levels_];
      V* dst = &data_[static_cast<std::size_t>(v) * levels_];
      for (int e = 0; e + d < levels_; ++e) {
        if (plus) dst[e + d] = ring_.add(dst[e + d], src[e]);
        else if (minus) dst[e + d] = ring_.sub(dst[e + d], src[e]);
        else dst[e + d] = ring_.add(dst[e + d], ring_.mul(cv, src[e]));
      }
    }
  }

  /// (1 - t^tpow g(x^xpow)) * this.
  ExcessPoly times_f(const IntLaurent& g, int tpow, int xpow) const {
    ExcessPoly out = *this;
    for (const auto& [s, c] : g.terms()) out.accumulate(*this, xpow * s, tpow, -c);
    return out;
  }

 private:
  const LatticeIndex* idx_;
  int levels_;
  Ring ring_;
  std::vector<V> data_;
};

}  // namespace cyint
