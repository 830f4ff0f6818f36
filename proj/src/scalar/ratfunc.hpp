#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "scalar/laurent.hpp"

namespace torsionlab {

/// Element of Q(t) in canonical reduced form: the denominator is a monic
/// ordinary polynomial with nonzero constant term, coprime to the numerator.
/// Canonical form makes operator== structural equality.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}     // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when `den` is zero.
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  static RatFunc t(int exponent = 1) { return RatFunc(LaurentPoly::t(exponent)); }

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentPoly(1); }
  bool is_constant() const { return is_laurent() && num_.is_constant(); }

  /// If the value is c * t^k, returns (c, k).
  std::optional<std::pair<Rational, int>> as_monomial() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  RatFunc bar() const;
  /// f(t) -> f(t^2).
  RatFunc double_powers() const { return substitute_power(2); }
  RatFunc substitute_power(int k) const;

  /// Throws PoleAtEvaluationPoint if the denominator vanishes at `a`.
  Rational evaluate(const Rational& a) const;
  /// Floating backend: pole when |den(a)| <= 1e-12.
  Complex evaluate(const Complex& a) const;

  /// "num" when the denominator is 1, else "(num)/(den)".
  std::string to_string(char var = 't') const;
  static RatFunc parse(std::string_view text, char var = 't');

 private:
  void canonicalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace torsionlab
