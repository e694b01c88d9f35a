#include "cyint/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace cyint {

std::string to_string(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

namespace {

// Row-reduces `m` in place; returns the rank. Columns [0, cols) are eliminated.
std::size_t row_reduce(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Rational inv = 1 / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational k = m[r][c];
      for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= k * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t vector_rank(const std::vector<Exponent>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return row_reduce(m, rows.front().size());
}

bool solve_combination(const std::vector<Exponent>& vs, const Exponent& u, std::vector<Rational>& c) {
  // Columns are the vectors v_j, augmented by u.
  std::size_t n = u.size(), k = vs.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = vs[j][i];
    m[i][k] = u[i];
  }
  std::size_t rank = row_reduce(m, k);
  if (rank < k) throw PolytopeError("solve_combination: dependent vectors");
  for (std::size_t i = rank; i < n; ++i)
    if (m[i][k] != 0) return false;
  c.assign(k, Rational(0));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (m[i][j] != 0) {
        c[j] = m[i][k];
        break;
      }
  return true;
}

Polytope::Polytope(std::size_t n, std::vector<Exponent> vertices, std::vector<std::vector<int>> facets)
    : n_(n), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  if (n_ == 0) throw PolytopeError("polytope dimension must be positive");
  for (const auto& l : facets_)
    if (l.size() != n_) throw PolytopeError("facet functional has wrong length");
  for (const auto& v : vertices_) {
    if (v.size() != n_) throw PolytopeError("vertex has wrong length");
    if (degree(v) != 1) throw PolytopeError("vertex " + to_string(v) + " does not have degree 1");
  }
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    Face face;
    std::vector<Exponent> pts;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (functional(f, vertices_[i]) == 1) {
        face.push_back(i);
        pts.push_back(vertices_[i]);
      }
    if (vector_rank(pts) != n_) throw PolytopeError("facet functional does not cut out a facet");
    facet_vertices_.push_back(face);
  }
  std::set<Face> all(facet_vertices_.begin(), facet_vertices_.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Face> cur(all.begin(), all.end());
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b) {
        Face x;
        std::set_intersection(cur[a].begin(), cur[a].end(), cur[b].begin(), cur[b].end(), std::back_inserter(x));
        if (!x.empty() && all.insert(x).second) grew = true;
      }
  }
  faces_.assign(all.begin(), all.end());
  std::stable_sort(faces_.begin(), faces_.end(),
                   [](const Face& a, const Face& b) { return a.size() < b.size(); });
}

int Polytope::functional(std::size_t facet, const Exponent& u) const {
  int s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += facets_[facet][i] * u[i];
  return s;
}

int Polytope::degree(const Exponent& u) const {
  int d = 0;
  for (std::size_t f = 0; f < facets_.size(); ++f) d = std::max(d, functional(f, u));
  return d;
}

std::vector<std::size_t> Polytope::active_facets(const Exponent& u) const {
  int d = degree(u);
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < facets_.size(); ++f)
    if (functional(f, u) == d) out.push_back(f);
  return out;
}

std::vector<Exponent> Polytope::lattice_points(int k) const {
  if (k < 0) throw PolytopeError("lattice_points: k must be nonnegative");
  int bound = 0;
  for (const auto& v : vertices_)
    for (int x : v) bound = std::max(bound, std::abs(x));
  bound *= k;
  std::vector<Exponent> out;
  Exponent u(n_, -bound);
  while (true) {
    if (degree(u) <= k) out.push_back(u);
    std::size_t i = n_;
    while (i > 0) {
      --i;
      if (u[i] < bound) {
        ++u[i];
        for (std::size_t j = i + 1; j < n_; ++j) u[j] = -bound;
        break;
      }
      if (i == 0) return out;
    }
    if (n_ == 0) return out;
  }
}

Face Polytope::minimal_face(const Exponent& u) const {
  auto act = active_facets(u);
  if (degree(u) == 0) throw PolytopeError("minimal_face: origin has no face");
  Face face = facet_vertices_[act.front()];
  for (std::size_t i = 1; i < act.size(); ++i) {
    Face x;
    const Face& other = facet_vertices_[act[i]];
    std::set_intersection(face.begin(), face.end(), other.begin(), other.end(), std::back_inserter(x));
    face = x;
  }
  return face;
}

std::vector<Exponent> Polytope::face_lattice_points(const Face& face) const {
  std::vector<Exponent> out;
  for (const auto& u : lattice_points(1)) {
    if (degree(u) != 1) continue;
    Face m = minimal_face(u);
    if (std::includes(face.begin(), face.end(), m.begin(), m.end())) out.push_back(u);
  }
  return out;
}

bool Polytope::in_cone(const Exponent& u, const Face& face) const {
  std::vector<Exponent> vs;
  for (auto i : face) vs.push_back(vertices_.at(i));
  if (vector_rank(vs) != vs.size()) throw PolytopeError("in_cone: face is not a simplex");
  std::vector<Rational> c;
  if (!solve_combination(vs, u, c)) return false;
  for (const auto& x : c)
    if (x < 0) return false;
  return true;
}

Polytope simplex_polytope(std::size_t n) {
  std::vector<Exponent> verts;
  for (std::size_t i = 0; i < n; ++i) verts.push_back(unit_exponent(n, i));
  verts.push_back(Exponent(n, -1));
  // The facet opposite the vertex -(1,...,1) is sum w_i = 1; the facet opposite e_j is
  // sum w_i - (n+1) w_j = 1.
  std::vector<std::vector<int>> facets;
  facets.push_back(std::vector<int>(n, 1));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> l(n, 1);
    l[j] = 1 - static_cast<int>(n + 1);
    facets.push_back(l);
  }
  return Polytope(n, verts, facets);
}

Polytope cross_polytope(std::size_t n) {
  std::vector<Exponent> verts;
  for (std::size_t i = 0; i < n; ++i) {
    verts.push_back(unit_exponent(n, i, 1));
    verts.push_back(unit_exponent(n, i, -1));
  }
  std::vector<std::vector<int>> facets;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<int> l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = (mask >> i & 1) ? -1 : 1;
    facets.push_back(l);
  }
  return Polytope(n, verts, facets);
}

}  // namespace cyint
