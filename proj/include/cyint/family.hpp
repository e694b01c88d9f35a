#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cyint/laurent.hpp"
#include "cyint/polytope.hpp"

namespace cyint {

enum class FamilyKind { kSimplicial, kHyperoctahedral, kCustom };

struct FamilySpec {
  FamilyKind kind = FamilyKind::kSimplicial;
  std::size_t n = 2;
  // Custom families only.
  IntLaurent custom_g;
  std::vector<std::vector<int>> custom_facets;

  static FamilySpec simplicial(std::size_t n) { return {FamilyKind::kSimplicial, n, {}, {}}; }
  static FamilySpec hyperoctahedral(std::size_t n) { return {FamilyKind::kHyperoctahedral, n, {}, {}}; }
  static FamilySpec custom(IntLaurent g, std::vector<std::vector<int>> facets) {
    std::size_t n = g.dimension();
    return {FamilyKind::kCustom, n, std::move(g), std::move(facets)};
  }
};

struct Family {
  FamilySpec spec;
  std::string name;
  IntLaurent g;
  Polytope polytope;
  /// Order of the monomial symmetry group; 1 when unknown (custom).
  Integer symmetry_order;
  /// Constant term of the leading Picard-Fuchs coefficient before normalization.
  Integer df0;

  std::size_t dimension() const { return spec.n; }
  bool builtin() const { return spec.kind != FamilyKind::kCustom; }
  /// f = 1 - t^tpow * g with coefficients in Q[[t]]/t^order.
  SeriesLaurent f(std::size_t order, int tpow = 1) const;
};

/// Throws PolytopeError for custom data that fail the reflexivity check, invalid_argument for n < 2 builtins.
Family build_family(const FamilySpec& spec);

std::string family_name(const FamilySpec& spec);

/// Vertices of conv(support) for the given facets: support points whose active facets have rank n.
std::vector<Exponent> vertices_from_facets(const std::vector<Exponent>& support,
                                           const std::vector<std::vector<int>>& facets);

/// Full reflexivity check of conv(support) against the listed facets; returns an empty string on success.
std::string reflexivity_problem(const std::vector<Exponent>& support, const std::vector<std::vector<int>>& facets);

/// Support points and coefficient are pruned against `P` when given: a monomial x^u of g^m that can no longer
/// return to the origin within the remaining powers is dropped.
QSeries constant_term_series(const IntLaurent& g, const Polytope& P, std::size_t order);
QSeries constant_term_series(const IntLaurent& g, std::size_t order);

/// Support within k*P and ord_t(a_u) >= tpow * deg(u).
bool is_admissible(const SeriesLaurent& a, int k, const Polytope& P, int tpow = 1);

}  // namespace cyint
