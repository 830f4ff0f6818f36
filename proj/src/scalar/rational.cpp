#include "scalar/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

#include "error.hpp"

namespace torsionlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s) {
  std::string buf(trim(s));
  if (buf.empty()) fail(ErrorCode::ParseError, "empty number");
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(buf, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad number '" + buf + "'");
  }
  if (used != buf.size() || !std::isfinite(v)) fail(ErrorCode::ParseError, "bad number '" + buf + "'");
  return v;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Complex& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) fail(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  BigInt d{std::string(den)};
  if (d == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational q{BigInt(std::string(num)), d};
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Complex parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.rfind("cis:", 0) == 0) {
    double theta = parse_double(s.substr(4));
    return std::polar(1.0, theta);
  }
  if (s.empty()) fail(ErrorCode::ParseError, "empty complex value");
  if (s.back() != 'i') {
    if (s.find('/') != std::string_view::npos) return Complex(parse_rational(s).get_d(), 0.0);
    return Complex(parse_double(s), 0.0);
  }
  std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that is not part of an exponent or the leading sign
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_of = [](std::string_view part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_double(part);
  };
  if (split == std::string_view::npos) return Complex(0.0, imag_of(body));
  return Complex(parse_double(body.substr(0, split)), imag_of(body.substr(split)));
}

SamplePoint parse_sample(std::string_view text) {
  SamplePoint p;
  std::string_view s = trim(text);
  bool looks_exact = !s.empty();
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) looks_exact = false;
  if (looks_exact) {
    p.is_exact = true;
    p.exact = parse_rational(s);
    p.floating = Complex(p.exact.get_d(), 0.0);
  } else {
    p.is_exact = false;
    p.floating = parse_complex(s);
  }
  return p;
}

}  // namespace torsionlab
