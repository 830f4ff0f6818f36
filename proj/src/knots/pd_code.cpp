#include "knots/pd_code.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "error.hpp"

namespace torsionlab {

namespace {

struct RawCrossing {
  std::array<int, 4> label{};
  int declared_sign = 0;  // 0 when absent
  std::size_t line = 0;
};

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  fail(ErrorCode::MalformedCode, "line " + std::to_string(line) + ": " + what);
}

int parse_label(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos)
    malformed(line, "bad edge label '" + tok + "'");
  int v = std::stoi(tok);
  if (v <= 0) malformed(line, "edge labels must be positive");
  return v;
}

std::vector<RawCrossing> scan(std::string_view text) {
  std::vector<RawCrossing> out;
  std::size_t line = 1;
  std::size_t i = 0;
  auto skip_space = [&]() {
    while (i < text.size()) {
      char ch = text[i];
      if (ch == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (ch == '\n') {
        ++line;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        ++i;
      } else {
        break;
      }
    }
  };
  auto read_token = [&]() {
    std::string tok;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) tok += text[i++];
    return tok;
  };
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    if (text[i] != 'X') malformed(line, std::string("expected 'X', got '") + text[i] + "'");
    ++i;
    RawCrossing c;
    c.line = line;
    if (i < text.size() && text[i] == '[') {
      ++i;
      for (int k = 0; k < 4; ++k) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        c.label[static_cast<std::size_t>(k)] = parse_label(read_token(), line);
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        char want = k < 3 ? ',' : ']';
        if (i >= text.size() || text[i] != want) malformed(line, std::string("expected '") + want + "'");
        ++i;
      }
    } else {
      for (int k = 0; k < 4; ++k) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        c.label[static_cast<std::size_t>(k)] = parse_label(read_token(), line);
      }
    }
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      c.declared_sign = text[i] == '+' ? 1 : -1;
      ++i;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  std::vector<RawCrossing> raw = scan(text);
  LinkDiagram d;
  if (raw.empty()) {
    d.free_loops = 1;
    return d;
  }
  // occurrences of each label: (crossing, position)
  std::map<int, std::vector<std::pair<std::size_t, int>>> occ;
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (int p = 0; p < 4; ++p) occ[raw[c].label[static_cast<std::size_t>(p)]].push_back({c, p});
  for (const auto& [label, list] : occ)
    if (list.size() != 2)
      fail(ErrorCode::InconsistentArcs, "edge " + std::to_string(label) + " occurs " + std::to_string(list.size()) + " times");

  // role[c][p]: +1 incoming, -1 outgoing, 0 unknown
  std::vector<std::array<int, 4>> role(raw.size(), {1, 0, -1, 0});
  std::deque<std::pair<std::size_t, int>> work;
  auto set_role = [&](std::size_t c, int p, int r) {
    int& slot = role[c][static_cast<std::size_t>(p)];
    if (slot == r) return;
    if (slot != 0)
      fail(ErrorCode::InconsistentArcs, "crossing " + std::to_string(c + 1) + " (line " + std::to_string(raw[c].line) +
                                            ") gets contradictory orientations");
    slot = r;
    work.push_back({c, p});
  };
  auto other = [&](std::size_t c, int p) {
    const auto& list = occ[raw[c].label[static_cast<std::size_t>(p)]];
    return list[0] == std::make_pair(c, p) ? list[1] : list[0];
  };
  for (std::size_t c = 0; c < raw.size(); ++c) {
    work.push_back({c, 0});
    work.push_back({c, 2});
  }
  std::size_t next_seed = 0;
  while (true) {
    while (!work.empty()) {
      auto [c, p] = work.front();
      work.pop_front();
      int r = role[c][static_cast<std::size_t>(p)];
      auto [oc, op] = other(c, p);
      set_role(oc, op, -r);
      if (p == 1 || p == 3) set_role(c, 4 - p, -r);
    }
    while (next_seed < raw.size() && role[next_seed][1] != 0) ++next_seed;
    if (next_seed == raw.size()) break;
    set_role(next_seed, 1, 1);
  }
  for (std::size_t c = 0; c < raw.size(); ++c) {
    const auto& l = raw[c].label;
    Crossing x;
    x.under_in = l[0];
    x.under_out = l[2];
    if (role[c][3] == 1) {  // over runs l -> j
      x.over_in = l[3];
      x.over_out = l[1];
      x.sign = 1;
    } else {
      x.over_in = l[1];
      x.over_out = l[3];
      x.sign = -1;
    }
    if (raw[c].declared_sign != 0 && raw[c].declared_sign != x.sign)
      fail(ErrorCode::InconsistentArcs, "crossing " + std::to_string(c + 1) + " (line " + std::to_string(raw[c].line) +
                                            ") declares sign " + (raw[c].declared_sign > 0 ? "+" : "-") +
                                            " but the orientation gives the opposite");
    d.crossings.push_back(x);
  }
  return d;
}

std::vector<std::vector<int>> LinkDiagram::traced_components() const {
  std::map<int, int> next;  // edge -> following edge
  for (const auto& c : crossings) {
    next[c.under_in] = c.under_out;
    next[c.over_in] = c.over_out;
  }
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (const auto& [start, unused] : next) {
    if (seen.count(start)) continue;
    std::vector<int> comp;
    int e = start;
    while (!seen.count(e)) {
      seen.insert(e);
      comp.push_back(e);
      auto it = next.find(e);
      if (it == next.end()) fail(ErrorCode::InconsistentArcs, "edge " + std::to_string(e) + " has no continuation");
      e = it->second;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings) w += c.sign;
  return w;
}

std::vector<int> LinkDiagram::edges() const {
  std::set<int> s;
  for (const auto& c : crossings) s.insert({c.under_in, c.under_out, c.over_in, c.over_out});
  return {s.begin(), s.end()};
}

std::string print_pd(const LinkDiagram& d) {
  std::string out;
  for (const auto& c : d.crossings) {
    std::array<int, 4> l = c.sign > 0 ? std::array<int, 4>{c.under_in, c.over_out, c.under_out, c.over_in}
                                      : std::array<int, 4>{c.under_in, c.over_in, c.under_out, c.over_out};
    out += "X[" + std::to_string(l[0]) + "," + std::to_string(l[1]) + "," + std::to_string(l[2]) + "," +
           std::to_string(l[3]) + "] " + (c.sign > 0 ? "+" : "-") + "\n";
  }
  return out;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram m = d;
  for (auto& c : m.crossings) {
    std::swap(c.under_in, c.over_in);
    std::swap(c.under_out, c.over_out);
    c.sign = -c.sign;
  }
  return m;
}

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.component_count() != 1 || b.component_count() != 1)
    fail(ErrorCode::NotAKnot, "connected sum needs two knots");
  if (a.crossings.empty()) return b;
  if (b.crossings.empty()) return a;
  auto ea = a.edges();
  auto eb = b.edges();
  const int offset = ea.back();
  LinkDiagram s = a;
  for (auto c : b.crossings) {
    c.under_in += offset;
    c.under_out += offset;
    c.over_in += offset;
    c.over_out += offset;
    s.crossings.push_back(c);
  }
  const int x = ea.front();
  const int y = eb.front() + offset;
  for (auto& c : s.crossings) {
    for (int* in : {&c.under_in, &c.over_in}) {
      if (*in == x) {
        *in = y;
      } else if (*in == y) {
        *in = x;
      }
    }
  }
  return s;
}

}  // namespace torsionlab
