#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "chain/det_torsion.hpp"

namespace torsionlab {

enum class FieldKind { Rational, Laurent, RatFunc, Complex };

const char* field_name(FieldKind f) noexcept;
/// "rational", "laurent", "ratfunc", "complex"; throws InvalidArgument.
FieldKind parse_field_name(std::string_view name);

/// A chain complex over one of the supported fields. Laurent entries are
/// stored as RatFunc values with denominator 1.
struct AnyComplex {
  FieldKind field = FieldKind::Rational;
  std::variant<ChainComplex<Rational>, ChainComplex<RatFunc>, ChainComplex<Complex>> complex;
};

// Text format, one directive per line, '#' starts a comment:
//
//   field rational|laurent|ratfunc|complex
//   dims n0 n1 ... nm
//   d 1
//   <n0 rows of n1 whitespace-separated entries>
//   d 2
//   ...
//
// Blocks appear in order q = 1..m; a block whose matrix is empty has no row
// lines. Entries: rational "3/2"; Laurent "1-t+2t^-1"; ratfunc "(1-t)/(1+t)";
// complex "0.5-2i" or "cis:1.2". Printing uses canonical strings (complex
// with 17 significant digits) so print(parse(print(x))) == print(x).
/// `field`, when given, replaces the field line of the text.
AnyComplex parse_chain_complex(std::string_view text, std::optional<FieldKind> field = std::nullopt);
std::string print_chain_complex(const AnyComplex& c);

/// Validates the stored complex (shapes and d^2 = 0).
void validate(const AnyComplex& c);

std::string format_scalar(const Rational& x);
std::string format_scalar(const RatFunc& x);
std::string format_scalar(const Complex& x);

}  // namespace torsionlab
