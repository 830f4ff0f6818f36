#include "chain/complex_io.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace torsionlab {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

template <class F>
F parse_entry(const std::string& tok, FieldKind kind) {
  if constexpr (std::is_same_v<F, Rational>) {
    return parse_rational(tok);
  } else if constexpr (std::is_same_v<F, Complex>) {
    return parse_complex(tok);
  } else {
    if (kind == FieldKind::Laurent) return RatFunc(LaurentPoly::parse(tok));
    return RatFunc::parse(tok);
  }
}

template <class F>
ChainComplex<F> parse_body(const std::vector<Line>& lines, std::size_t start, FieldKind kind,
                           const std::vector<std::size_t>& dims) {
  ChainComplex<F> c;
  c.dims.dims = dims;
  const int m = c.top();
  std::size_t i = start;
  for (int q = 1; q <= m; ++q) {
    const std::size_t rows = c.dims[q - 1];
    const std::size_t cols = c.dims[q];
    Matrix<F> mat(rows, cols);
    bool have_header = i < lines.size() && lines[i].tokens.size() == 2 && lines[i].tokens[0] == "d";
    if (!have_header) {
      if (rows * cols == 0) {
        c.d.push_back(mat);
        continue;
      }
      parse_fail(i < lines.size() ? lines[i].number : lines.empty() ? 0 : lines.back().number,
                 "expected 'd " + std::to_string(q) + "'");
    }
    if (lines[i].tokens[1] != std::to_string(q))
      parse_fail(lines[i].number, "expected 'd " + std::to_string(q) + "', got 'd " + lines[i].tokens[1] + "'");
    ++i;
    if (rows * cols > 0) {
      for (std::size_t r = 0; r < rows; ++r, ++i) {
        if (i >= lines.size()) parse_fail(lines.back().number, "missing row " + std::to_string(r + 1) + " of d" + std::to_string(q));
        const auto& l = lines[i];
        if (l.tokens.size() != cols)
          parse_fail(l.number, "row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(cols));
        for (std::size_t col = 0; col < cols; ++col) {
          try {
            mat(r, col) = parse_entry<F>(l.tokens[col], kind);
          } catch (const Error& e) {
            parse_fail(l.number, std::string("entry ") + std::to_string(col + 1) + ": " + e.what());
          }
        }
      }
    }
    c.d.push_back(mat);
  }
  if (i < lines.size()) parse_fail(lines[i].number, "unexpected content '" + lines[i].tokens[0] + "'");
  return c;
}

template <class F>
std::string print_body(const ChainComplex<F>& c) {
  std::string out = "dims";
  for (auto n : c.dims.dims) out += " " + std::to_string(n);
  out += "\n";
  for (int q = 1; q <= c.top(); ++q) {
    out += "d " + std::to_string(q) + "\n";
    const auto& m = c.d[static_cast<std::size_t>(q - 1)];
    if (m.rows() * m.cols() == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t col = 0; col < m.cols(); ++col) {
        if (col) out += ' ';
        out += format_scalar(m(r, col));
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace

const char* field_name(FieldKind f) noexcept {
  switch (f) {
    case FieldKind::Rational: return "rational";
    case FieldKind::Laurent: return "laurent";
    case FieldKind::RatFunc: return "ratfunc";
    case FieldKind::Complex: return "complex";
  }
  return "?";
}

FieldKind parse_field_name(std::string_view name) {
  if (name == "rational") return FieldKind::Rational;
  if (name == "laurent") return FieldKind::Laurent;
  if (name == "ratfunc") return FieldKind::RatFunc;
  if (name == "complex") return FieldKind::Complex;
  fail(ErrorCode::InvalidArgument, "unknown field '" + std::string(name) + "'");
}

std::string format_scalar(const Rational& x) { return to_string(x); }
std::string format_scalar(const RatFunc& x) { return x.to_string(); }
std::string format_scalar(const Complex& x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", x.real(), x.imag());
  return buf;
}

AnyComplex parse_chain_complex(std::string_view text, std::optional<FieldKind> field) {
  auto lines = tokenize(text);
  std::size_t i = 0;
  AnyComplex out;
  if (i < lines.size() && lines[i].tokens[0] == "field") {
    if (lines[i].tokens.size() != 2) parse_fail(lines[i].number, "expected 'field <name>'");
    try {
      out.field = parse_field_name(lines[i].tokens[1]);
    } catch (const Error& e) {
      parse_fail(lines[i].number, e.what());
    }
    ++i;
  }
  if (i >= lines.size() || lines[i].tokens[0] != "dims")
    parse_fail(i < lines.size() ? lines[i].number : 1, "expected 'dims n0 ... nm'");
  std::vector<std::size_t> dims;
  for (std::size_t k = 1; k < lines[i].tokens.size(); ++k) {
    const auto& tok = lines[i].tokens[k];
    if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos)
      parse_fail(lines[i].number, "bad dimension '" + tok + "'");
    dims.push_back(static_cast<std::size_t>(std::stoul(tok)));
  }
  if (dims.empty()) parse_fail(lines[i].number, "dims needs at least one entry");
  ++i;
  if (field) out.field = *field;
  switch (out.field) {
    case FieldKind::Rational: out.complex = parse_body<Rational>(lines, i, out.field, dims); break;
    case FieldKind::Laurent:
    case FieldKind::RatFunc: out.complex = parse_body<RatFunc>(lines, i, out.field, dims); break;
    case FieldKind::Complex: out.complex = parse_body<Complex>(lines, i, out.field, dims); break;
  }
  return out;
}

std::string print_chain_complex(const AnyComplex& c) {
  std::string out = std::string("field ") + field_name(c.field) + "\n";
  std::visit([&](const auto& cc) { out += print_body(cc); }, c.complex);
  return out;
}

void validate(const AnyComplex& c) {
  std::visit([](const auto& cc) { cc.validate(); }, c.complex);
}

}  // namespace torsionlab
