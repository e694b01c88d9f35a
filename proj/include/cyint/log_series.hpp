#pragma once

#include <vector>

#include "cyint/series.hpp"

namespace cyint {

/// sum_j P_j(t) (log t)^j; factorials, if any, live inside the parts.
template <class R>
class LogSeries {
 public:
  LogSeries() = default;
  explicit LogSeries(TruncatedSeries<R> p0) { parts_.push_back(std::move(p0)); }
  explicit LogSeries(std::vector<TruncatedSeries<R>> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw SeriesError("log series needs at least one part");
    trim();
  }

  /// The series log t.
  static LogSeries log_t(std::size_t order, const R& zero_like) {
    return LogSeries({TruncatedSeries<R>(order, zero_like), TruncatedSeries<R>::constant(ring_one(zero_like), order)});
  }

  std::size_t log_degree() const { return parts_.size() - 1; }
  std::size_t order() const { return parts_.front().order(); }
  const std::vector<TruncatedSeries<R>>& parts() const { return parts_; }
  const TruncatedSeries<R>& part(std::size_t j) const { return parts_.at(j); }
  TruncatedSeries<R> part_or_zero(std::size_t j) const {
    return j < parts_.size() ? parts_[j] : TruncatedSeries<R>(order(), parts_.front().zero_element());
  }

  bool is_zero() const { return parts_.size() == 1 && parts_[0].is_zero(); }

  friend LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    std::size_t d = std::max(a.parts_.size(), b.parts_.size());
    std::vector<TruncatedSeries<R>> out;
    for (std::size_t j = 0; j < d; ++j) out.push_back(a.part_or_zero(j) + b.part_or_zero(j));
    return LogSeries(std::move(out));
  }
  LogSeries operator-() const {
    LogSeries r = *this;
    for (auto& p : r.parts_) p = -p;
    return r;
  }
  friend LogSeries operator-(const LogSeries& a, const LogSeries& b) { return a + (-b); }

  friend LogSeries operator*(const TruncatedSeries<R>& s, const LogSeries& a) {
    std::vector<TruncatedSeries<R>> out;
    for (const auto& p : a.parts_) out.push_back(s * p);
    return LogSeries(std::move(out));
  }
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    std::size_t d = a.parts_.size() + b.parts_.size() - 1;
    std::vector<TruncatedSeries<R>> out(d, TruncatedSeries<R>(std::min(a.order(), b.order()), a.parts_[0].zero_element()));
    for (std::size_t i = 0; i < a.parts_.size(); ++i)
      for (std::size_t j = 0; j < b.parts_.size(); ++j) out[i + j] += a.parts_[i] * b.parts_[j];
    return LogSeries(std::move(out));
  }

 private:
  void trim() {
    while (parts_.size() > 1 && parts_.back().is_zero()) parts_.pop_back();
  }

  std::vector<TruncatedSeries<R>> parts_;
};

/// theta((log t)^j P) = (log t)^j theta(P) + j (log t)^{j-1} P.
template <class R>
LogSeries<R> theta(const LogSeries<R>& a) {
  std::vector<TruncatedSeries<R>> out;
  const auto& parts = a.parts();
  const R& z = parts[0].zero_element();
  for (std::size_t j = 0; j < parts.size(); ++j) {
    TruncatedSeries<R> piece = theta(parts[j]);
    if (j + 1 < parts.size()) piece += parts[j + 1] * embed(z, Rational(static_cast<long>(j + 1)));
    out.push_back(std::move(piece));
  }
  return LogSeries<R>(std::move(out));
}

/// t -> t^p with log t -> p log t.
template <class R>
LogSeries<R> frobenius_substitute(const LogSeries<R>& a, std::size_t p) {
  std::vector<TruncatedSeries<R>> out;
  const auto& parts = a.parts();
  const R& z = parts[0].zero_element();
  Rational scale = 1;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    out.push_back(frobenius_substitute(parts[j], p) * embed(z, scale));
    scale *= static_cast<long>(p);
  }
  return LogSeries<R>(std::move(out));
}

using QLogSeries = LogSeries<Rational>;

}  // namespace cyint
