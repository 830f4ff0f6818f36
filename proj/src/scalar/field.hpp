#pragma once

#include <cmath>
#include <string>

#include "scalar/rational.hpp"
#include "scalar/ratfunc.hpp"

namespace torsionlab {

/// What the elimination code needs to know about a coefficient field.
/// Exact fields pivot on the first nonzero entry (leftmost-pivot rule);
/// the floating field uses partial pivoting and a fixed zero threshold.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
  static std::string to_string(const Rational& x) { return torsionlab::to_string(x); }
};

template <>
struct FieldTraits<RatFunc> {
  static constexpr bool exact = true;
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
  static double magnitude(const RatFunc& x) { return x.is_zero() ? 0.0 : 1.0; }
  static std::string to_string(const RatFunc& x) { return x.to_string(); }
};

template <>
struct FieldTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr double zero_threshold = 1e-10;
  static bool is_zero(const Complex& x) { return std::abs(x) <= zero_threshold; }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static std::string to_string(const Complex& x) { return torsionlab::to_string(x); }
};

template <class F>
bool is_zero(const F& x) {
  return FieldTraits<F>::is_zero(x);
}

}  // namespace torsionlab
