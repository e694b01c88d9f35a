#include "cyint/excess.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace cyint {

LatticeIndex::LatticeIndex(const Polytope& P, const std::vector<Exponent>& steps, int max_degree)
    : P_(&P), n_(P.dimension()), max_degree_(max_degree) {
  int maxc = 1;
  for (const auto& s : steps)
    for (int x : s) maxc = std::max(maxc, std::abs(x));
  bound_ = maxc * std::max(max_degree, 1) + 1;
  std::uint64_t span = 2 * static_cast<std::uint64_t>(bound_) + 1, total = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    if (total > (~std::uint64_t(0)) / span) throw std::overflow_error("lattice index too large");
    total *= span;
  }
  std::deque<Exponent> queue{zero_exponent(n_)};
  bool ok = true;
  lookup_.emplace(key(queue.front(), ok), 0);
  points_.push_back(queue.front());
  degree_.push_back(0);
  while (!queue.empty()) {
    Exponent u = queue.front();
    queue.pop_front();
    for (const auto& s : steps) {
      Exponent v = u + s;
      int d = P.degree(v);
      if (d > max_degree) continue;
      std::uint64_t k = key(v, ok);
      if (!ok || lookup_.count(k)) continue;
      lookup_.emplace(k, static_cast<std::int32_t>(points_.size()));
      points_.push_back(v);
      degree_.push_back(d);
      queue.push_back(v);
    }
  }
}

std::uint64_t LatticeIndex::key(const Exponent& u, bool& ok) const {
  std::uint64_t span = 2 * static_cast<std::uint64_t>(bound_) + 1, k = 0;
  ok = true;
  for (int x : u) {
    if (std::abs(x) > bound_) {
      ok = false;
      return 0;
    }
    k = k * span + static_cast<std::uint64_t>(x + bound_);
  }
  return k;
}

std::int64_t LatticeIndex::find(const Exponent& u) const {
  bool ok;
  std::uint64_t k = key(u, ok);
  if (!ok) return -1;
  auto it = lookup_.find(k);
  return it == lookup_.end() ? -1 : it->second;
}

const std::vector<std::int32_t>& LatticeIndex::neighbor(const Exponent& shift) const {
  auto it = neighbors_.find(shift);
  if (it != neighbors_.end()) return it->second;
  std::vector<std::int32_t> nb(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) nb[i] = static_cast<std::int32_t>(find(points_[i] + shift));
  return neighbors_.emplace(shift, std::move(nb)).first->second;
}

}  // namespace cyint
