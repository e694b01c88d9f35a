#pragma once

// Coefficient-ring hooks shared by the generic series code. A ring type R
// provides: +, -, *, / (by invertible elements), embed(like, Rational),
// is_zero(x), is_invertible(x) and to_string(x). A zero "prototype" carries
// ring parameters such as p and the working precision.

#include <string>

#include "cyint/padic.hpp"
#include "cyint/rational.hpp"
#include "cyint/zmod.hpp"

namespace cyint {

inline Rational embed(const Rational&, const Rational& r) { return r; }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_invertible(const Rational& x) { return x != 0; }

template <class R>
R ring_zero(const R& like) {
  return embed(like, Rational(0));
}

template <class R>
R ring_one(const R& like) {
  return embed(like, Rational(1));
}

}  // namespace cyint
