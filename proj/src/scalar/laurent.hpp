#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"
#include "scalar/rational.hpp"

namespace torsionlab {

/// Finitely supported map exponent -> nonzero rational coefficient, in one
/// variable (t unless stated otherwise). The zero polynomial has no terms.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c) { add_term(0, Rational(c)); }  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly t(int exponent = 1) { return monomial(Rational(1), exponent); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_ordinary() const noexcept { return terms_.empty() || terms_.begin()->first >= 0; }
  bool has_integer_coefficients() const;

  int min_exponent() const;
  int max_exponent() const;
  Rational coeff(int exponent) const;
  const Rational& leading_coeff() const;
  const Rational& trailing_coeff() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  /// t -> t^{-1}.
  LaurentPoly bar() const { return substitute_power(-1); }
  /// t -> t^k, k != 0.
  LaurentPoly substitute_power(int k) const;
  /// t^{-min_exponent} * p: an ordinary polynomial with nonzero constant term.
  LaurentPoly stripped() const;

  Rational evaluate(const Rational& a) const;
  Complex evaluate(const Complex& a) const;

  std::string to_string(char var = 't') const;
  /// Grammar: ["+"|"-"] term {("+"|"-") term}; term = coef | [coef]["*"]var["^"int].
  static LaurentPoly parse(std::string_view text, char var = 't');

 private:
  void add_term(int exponent, const Rational& c);
  Terms terms_;
};

/// Division with remainder of ordinary polynomials; `divisor` nonzero.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// Monic gcd over Q of the stripped forms; gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b in Q[t, t^-1]; throws Internal if b does not divide a.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

/// Least common multiple of the coefficient denominators and gcd of the
/// coefficient numerators; used to make integral primitive polynomials.
BigInt denominator_lcm(const LaurentPoly& p);
BigInt numerator_gcd(const LaurentPoly& p);

}  // namespace torsionlab
