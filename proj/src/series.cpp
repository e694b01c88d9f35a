#include "cyint/series.hpp"

namespace cyint {

PSeries to_padic(const QSeries& a, std::int64_t p, std::int64_t precision) {
  return a.map([&](const Rational& x) { return PadicScalar::from_rational(x, p, precision); });
}

}  // namespace cyint
