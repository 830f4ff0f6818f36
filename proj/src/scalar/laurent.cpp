#include "scalar/laurent.hpp"

#include <cctype>
#include <cstdlib>

namespace torsionlab {

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool LaurentPoly::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) fail(ErrorCode::Internal, "min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) fail(ErrorCode::Internal, "max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) fail(ErrorCode::Internal, "leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

const Rational& LaurentPoly::trailing_coeff() const {
  if (terms_.empty()) fail(ErrorCode::Internal, "trailing coefficient of zero polynomial");
  return terms_.begin()->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) fail(ErrorCode::InvalidArgument, "substitute_power by 0");
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
  return r;
}

LaurentPoly LaurentPoly::stripped() const {
  if (terms_.empty()) return {};
  return shifted(-min_exponent());
}

Rational LaurentPoly::evaluate(const Rational& a) const {
  if (terms_.empty()) return Rational(0);
  if (sgn(a) == 0) {
    if (min_exponent() < 0) fail(ErrorCode::PoleAtEvaluationPoint, "negative power of t evaluated at 0");
    return coeff(0);
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational p = e >= 0 ? ipow(a, e) : ipow(Rational(1 / a), -static_cast<long>(e));
    acc += c * p;
  }
  return acc;
}

Complex LaurentPoly::evaluate(const Complex& a) const {
  if (terms_.empty()) return Complex(0.0);
  if (std::abs(a) <= 1e-12 && min_exponent() < 0)
    fail(ErrorCode::PoleAtEvaluationPoint, "negative power of t evaluated near 0");
  Complex acc(0.0);
  for (const auto& [e, c] : terms_) acc += c.get_d() * std::pow(a, e);
  return acc;
}

std::string LaurentPoly::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string term;
    if (e == 0) {
      term = torsionlab::to_string(c);
    } else {
      if (c == 1) {
        term = "";
      } else if (c == -1) {
        term = "-";
      } else {
        term = torsionlab::to_string(c);
      }
      term += var;
      if (e != 1) term += "^" + std::to_string(e);
    }
    if (!first && term.front() != '-') out += '+';
    out += term;
    first = false;
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto bad = [&](const std::string& why) -> void {
    fail(ErrorCode::ParseError, "bad polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) bad("empty");
  LaurentPoly p;
  std::size_t i = 0;
  bool first = true;
  auto read_digits = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      bad("expected '+' or '-'");
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    std::string num = read_digits();
    if (!num.empty()) {
      have_coef = true;
      std::string den = "1";
      if (i < s.size() && s[i] == '/') {
        ++i;
        den = read_digits();
        if (den.empty()) bad("missing denominator");
      }
      BigInt d(den);
      if (d == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
      coef = Rational(BigInt(num), d);
      coef.canonicalize();
    }
    int exponent = 0;
    bool have_var = false;
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) bad("dangling '*'");
      ++i;
      if (i >= s.size() || s[i] != var) bad("expected variable after '*'");
    }
    if (i < s.size() && s[i] == var) {
      have_var = true;
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool neg_exp = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          neg_exp = s[i] == '-';
          ++i;
        }
        std::string digits = read_digits();
        if (digits.empty() || digits.size() > 9) bad("bad exponent");
        exponent = std::atoi(digits.c_str());
        if (neg_exp) exponent = -exponent;
      }
    }
    if (!have_coef && !have_var) bad("empty term");
    p.add_term(exponent, negative ? Rational(-coef) : coef);
  }
  return p;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (!dividend.is_ordinary() || !divisor.is_ordinary())
    fail(ErrorCode::Internal, "poly_divmod needs ordinary polynomials");
  LaurentPoly q;
  LaurentPoly r = dividend;
  const int dd = divisor.max_exponent();
  const Rational& lc = divisor.leading_coeff();
  while (!r.is_zero() && r.max_exponent() >= dd) {
    LaurentPoly step = LaurentPoly::monomial(r.leading_coeff() / lc, r.max_exponent() - dd);
    q += step;
    r -= step * divisor;
  }
  return {q, r};
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a.stripped();
  LaurentPoly y = b.stripped();
  while (!y.is_zero()) {
    LaurentPoly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * Rational(1 / x.leading_coeff());
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "exact_quotient by zero");
  if (a.is_zero()) return {};
  auto [q, r] = poly_divmod(a.stripped(), b.stripped());
  if (!r.is_zero()) fail(ErrorCode::Internal, "exact_quotient: " + b.to_string() + " does not divide " + a.to_string());
  return q.shifted(a.min_exponent() - b.min_exponent());
}

BigInt denominator_lcm(const LaurentPoly& p) {
  BigInt l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

BigInt numerator_gcd(const LaurentPoly& p) {
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

}  // namespace torsionlab
