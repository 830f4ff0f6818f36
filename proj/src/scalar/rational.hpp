#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace torsionlab {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;
using Complex = std::complex<double>;

std::string to_string(const Rational& q);
std::string to_string(const Complex& z);

// Accepts "7", "-3/4", "+2". Throws ParseError.
Rational parse_rational(std::string_view text);

// Accepts a rational, "x+yi", "x-yi", "yi", "i" or "cis:theta" (unit circle).
// Throws ParseError; rejects NaN/Inf.
Complex parse_complex(std::string_view text);

// Parses either form; `is_exact` tells which one was taken.
struct SamplePoint {
  bool is_exact = true;
  Rational exact;
  Complex floating;
};
SamplePoint parse_sample(std::string_view text);

template <class T>
T ipow(T base, long exp) {
  T result(1);
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace torsionlab
