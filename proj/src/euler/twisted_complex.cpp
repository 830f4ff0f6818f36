#include "euler/twisted_complex.hpp"

#include <sstream>

#include "scalar/linalg.hpp"

namespace torsionlab {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

long parse_count(const Line& l, std::size_t k) {
  const auto& tok = l.tokens[k];
  if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos)
    parse_fail(l.number, "bad count '" + tok + "'");
  return std::stol(tok);
}

bool parse_flag(const Line& l) {
  if (l.tokens.size() != 2) parse_fail(l.number, "expected '" + l.tokens[0] + " yes|no'");
  if (l.tokens[1] == "yes") return true;
  if (l.tokens[1] == "no") return false;
  parse_fail(l.number, "expected yes or no, got '" + l.tokens[1] + "'");
}

const char* flag(bool b) { return b ? "yes" : "no"; }

}  // namespace

Matrix<LaurentPoly> TwistedCWComplex::boundary(int q) const {
  if (q >= 1 && q <= top) return d[static_cast<std::size_t>(q - 1)];
  return Matrix<LaurentPoly>(cell_count(q - 1), cell_count(q));
}

long TwistedCWComplex::semi_characteristic() const {
  long s = 0;
  for (int q = 0; q <= (top - 1) / 2; q += 2)
    if (static_cast<std::size_t>(q) < betti.size()) s += betti[static_cast<std::size_t>(q)];
  return s;
}

void TwistedCWComplex::validate() const {
  if (top < 1 || top % 2 == 0) fail(ErrorCode::ComplexInvalid, "top degree must be odd, got " + std::to_string(top));
  if (cells.size() != static_cast<std::size_t>(top + 1))
    fail(ErrorCode::ComplexInvalid, "need " + std::to_string(top + 1) + " cell counts");
  if (d.size() != static_cast<std::size_t>(top)) fail(ErrorCode::ComplexInvalid, "need " + std::to_string(top) + " boundary maps");
  long chi = 0;
  for (int q = 0; q <= top; ++q) chi += (q % 2 ? -1 : 1) * static_cast<long>(cells[static_cast<std::size_t>(q)]);
  if (chi != 0) fail(ErrorCode::ComplexInvalid, "Euler characteristic is " + std::to_string(chi) + ", expected 0");
  for (int q = 1; q <= top; ++q) {
    const auto& m = d[static_cast<std::size_t>(q - 1)];
    if (m.rows() != cell_count(q - 1) || m.cols() != cell_count(q))
      fail(ErrorCode::ComplexInvalid, "d" + std::to_string(q) + " has shape " + m.shape());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).has_integer_coefficients())
          fail(ErrorCode::ComplexInvalid, "d" + std::to_string(q) + " has a non-integer entry " + m(r, c).to_string());
  }
  for (int q = 2; q <= top; ++q) {
    auto prod = boundary(q - 1) * boundary(q);
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c)
        if (!prod(r, c).is_zero()) fail(ErrorCode::ComplexInvalid, "d" + std::to_string(q - 1) + " d" + std::to_string(q) + " != 0");
  }
  if (betti.size() != static_cast<std::size_t>(top + 1))
    fail(ErrorCode::ComplexInvalid, "need " + std::to_string(top + 1) + " Betti numbers");
  std::vector<std::size_t> ranks;
  for (int q = 0; q <= top + 1; ++q) {
    auto m = boundary(q).map([](const LaurentPoly& p) { return p.evaluate(Rational(1)); });
    ranks.push_back(rank(m));
  }
  for (int q = 0; q <= top; ++q) {
    long b = static_cast<long>(cell_count(q)) - static_cast<long>(ranks[static_cast<std::size_t>(q)]) -
             static_cast<long>(ranks[static_cast<std::size_t>(q + 1)]);
    if (b != betti[static_cast<std::size_t>(q)])
      fail(ErrorCode::ComplexInvalid, "declared b" + std::to_string(q) + " = " + std::to_string(betti[static_cast<std::size_t>(q)]) +
                                          " but the untwisted homology has rank " + std::to_string(b));
  }
}

TwistedCWComplex parse_twisted_complex(std::string_view text) {
  auto lines = tokenize(text);
  TwistedCWComplex x;
  x.cells.clear();
  bool have_dim = false;
  bool have_cells = false;
  std::size_t i = 0;
  for (; i < lines.size() && lines[i].tokens[0] != "d"; ++i) {
    const auto& l = lines[i];
    const auto& key = l.tokens[0];
    if (key == "dim") {
      if (l.tokens.size() != 2) parse_fail(l.number, "expected 'dim m'");
      x.top = static_cast<int>(parse_count(l, 1));
      have_dim = true;
    } else if (key == "cells") {
      for (std::size_t k = 1; k < l.tokens.size(); ++k) x.cells.push_back(static_cast<std::size_t>(parse_count(l, k)));
      have_cells = true;
    } else if (key == "orientable") {
      x.orientable = parse_flag(l);
    } else if (key == "betti") {
      x.betti.clear();
      for (std::size_t k = 1; k < l.tokens.size(); ++k) x.betti.push_back(parse_count(l, k));
    } else if (key == "sw_conditions") {
      x.sw_conditions = parse_flag(l);
    } else {
      parse_fail(l.number, "unknown directive '" + key + "'");
    }
  }
  if (!have_dim || !have_cells) parse_fail(lines.empty() ? 1 : lines.front().number, "missing 'dim' or 'cells'");
  if (x.cells.size() != static_cast<std::size_t>(x.top + 1))
    parse_fail(lines.front().number, "cells lists " + std::to_string(x.cells.size()) + " counts for dim " + std::to_string(x.top));
  for (int q = 1; q <= x.top; ++q) {
    const std::size_t rows = x.cell_count(q - 1);
    const std::size_t cols = x.cell_count(q);
    Matrix<LaurentPoly> m(rows, cols);
    bool have_header = i < lines.size() && lines[i].tokens.size() == 2 && lines[i].tokens[0] == "d";
    if (!have_header) {
      if (rows * cols == 0) {
        x.d.push_back(m);
        continue;
      }
      parse_fail(i < lines.size() ? lines[i].number : lines.back().number, "expected 'd " + std::to_string(q) + "'");
    }
    if (lines[i].tokens[1] != std::to_string(q)) parse_fail(lines[i].number, "expected 'd " + std::to_string(q) + "'");
    ++i;
    if (rows * cols > 0) {
      for (std::size_t r = 0; r < rows; ++r, ++i) {
        if (i >= lines.size()) parse_fail(lines.back().number, "missing rows in d" + std::to_string(q));
        const auto& l = lines[i];
        if (l.tokens.size() != cols) parse_fail(l.number, "row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) {
          try {
            m(r, c) = LaurentPoly::parse(l.tokens[c]);
          } catch (const Error& e) {
            parse_fail(l.number, e.what());
          }
        }
      }
    }
    x.d.push_back(m);
  }
  if (i < lines.size()) parse_fail(lines[i].number, "unexpected content '" + lines[i].tokens[0] + "'");
  return x;
}

std::string print_twisted_complex(const TwistedCWComplex& x) {
  std::string out = "dim " + std::to_string(x.top) + "\ncells";
  for (auto n : x.cells) out += " " + std::to_string(n);
  out += std::string("\norientable ") + flag(x.orientable) + "\nbetti";
  for (auto b : x.betti) out += " " + std::to_string(b);
  out += std::string("\nsw_conditions ") + flag(x.sw_conditions) + "\n";
  for (int q = 1; q <= x.top; ++q) {
    out += "d " + std::to_string(q) + "\n";
    const auto& m = x.d[static_cast<std::size_t>(q - 1)];
    if (m.rows() * m.cols() == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c) out += ' ';
        out += m(r, c).to_string();
      }
      out += "\n";
    }
  }
  return out;
}

TwistedCWComplex relift_cell(const TwistedCWComplex& x, int q, std::size_t i, int k) {
  if (q < 0 || q > x.top || i >= x.cell_count(q))
    fail(ErrorCode::InvalidArgument, "no cell " + std::to_string(i) + " in degree " + std::to_string(q));
  TwistedCWComplex y = x;
  if (q >= 1) {
    auto& m = y.d[static_cast<std::size_t>(q - 1)];
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) = m(r, i).shifted(k);
  }
  if (q + 1 <= x.top) {
    auto& m = y.d[static_cast<std::size_t>(q)];
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = m(i, c).shifted(-k);
  }
  return y;
}

}  // namespace torsionlab
