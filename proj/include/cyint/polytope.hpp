#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyint/laurent.hpp"

namespace cyint {

class PolytopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A face, recorded by the indices of its vertices.
using Face = std::vector<std::size_t>;

/// Reflexive lattice polytope given by vertices and facet functionals l with l = 1 on each facet.
class Polytope {
 public:
  Polytope() = default;
  /// Throws PolytopeError unless the data describe a reflexive polytope.
  Polytope(std::size_t n, std::vector<Exponent> vertices, std::vector<std::vector<int>> facets);

  std::size_t dimension() const { return n_; }
  const std::vector<Exponent>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }

  int functional(std::size_t facet, const Exponent& u) const;
  /// max over facet functionals; the unique d with u on the boundary of d*P.
  int degree(const Exponent& u) const;
  /// Facets attaining the degree at u.
  std::vector<std::size_t> active_facets(const Exponent& u) const;

  /// All u with degree(u) <= k, in lexicographic order.
  std::vector<Exponent> lattice_points(int k) const;

  /// Vertex set of each facet.
  const std::vector<Face>& facet_vertices() const { return facet_vertices_; }
  /// All proper nonempty faces, closed under intersection; sorted by size then indices.
  const std::vector<Face>& faces() const { return faces_; }
  /// Smallest face whose cone contains u (u != 0).
  Face minimal_face(const Exponent& u) const;
  /// Lattice points of a face (points of degree 1 in its cone).
  std::vector<Exponent> face_lattice_points(const Face& face) const;

  /// Cone membership decided from vertex coordinates alone (nonnegative combination), for simplicial faces.
  bool in_cone(const Exponent& u, const Face& face) const;

 private:
  std::size_t n_ = 0;
  std::vector<Exponent> vertices_;
  std::vector<std::vector<int>> facets_;
  std::vector<Face> facet_vertices_;
  std::vector<Face> faces_;
};

Polytope simplex_polytope(std::size_t n);
Polytope cross_polytope(std::size_t n);

/// Rank of a set of integer vectors.
std::size_t vector_rank(const std::vector<Exponent>& rows);

/// Solves sum_j c_j v_j = u; returns false when u is not in the span (vectors assumed independent).
bool solve_combination(const std::vector<Exponent>& vs, const Exponent& u, std::vector<Rational>& c);

}  // namespace cyint
