#include "scalar/ratfunc.hpp"

#include <cctype>

namespace torsionlab {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // move powers of t out of the denominator
  const int shift = den_.min_exponent();
  den_ = den_.shifted(-shift);
  num_ = num_.shifted(-shift);
  if (!den_.is_constant()) {
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  Rational lc = den_.leading_coeff();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<std::pair<Rational, int>> RatFunc::as_monomial() const {
  if (!is_laurent() || !num_.is_monomial()) return std::nullopt;
  const auto& [e, c] = *num_.terms().begin();
  return std::make_pair(c, e);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::bar() const { return substitute_power(-1); }

RatFunc RatFunc::substitute_power(int k) const {
  return RatFunc(num_.substitute_power(k), den_.substitute_power(k));
}

Rational RatFunc::evaluate(const Rational& a) const {
  Rational d = den_.evaluate(a);
  if (sgn(d) == 0) fail(ErrorCode::PoleAtEvaluationPoint, "denominator " + den_.to_string() + " vanishes at " + torsionlab::to_string(a));
  return num_.evaluate(a) / d;
}

Complex RatFunc::evaluate(const Complex& a) const {
  Complex d = den_.evaluate(a);
  if (std::abs(d) <= 1e-12) fail(ErrorCode::PoleAtEvaluationPoint, "denominator " + den_.to_string() + " vanishes near " + torsionlab::to_string(a));
  return num_.evaluate(a) / d;
}

std::string RatFunc::to_string(char var) const {
  if (is_laurent()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFunc RatFunc::parse(std::string_view text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (!s.empty() && s.front() == '(') {
    auto close = s.find(')');
    if (close == std::string::npos || close + 2 >= s.size() || s[close + 1] != '/' || s[close + 2] != '(' ||
        s.back() != ')')
      fail(ErrorCode::ParseError, "bad rational function '" + std::string(text) + "'");
    LaurentPoly n = LaurentPoly::parse(s.substr(1, close - 1), var);
    LaurentPoly d = LaurentPoly::parse(s.substr(close + 3, s.size() - close - 4), var);
    return RatFunc(n, d);
  }
  return RatFunc(LaurentPoly::parse(s, var));
}

}  // namespace torsionlab
