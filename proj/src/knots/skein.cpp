#include "knots/skein.hpp"

#include <map>
#include <set>
#include <string>

#include "error.hpp"

namespace torsionlab {

namespace {

std::string encode(const LinkDiagram& d) {
  std::string key = std::to_string(d.free_loops) + ":";
  for (const auto& c : d.crossings)
    key += std::to_string(c.under_in) + "," + std::to_string(c.under_out) + "," + std::to_string(c.over_in) + "," +
           std::to_string(c.over_out) + (c.sign > 0 ? "+;" : "-;");
  return key;
}

void relabel(LinkDiagram& d, int from, int to) {
  for (auto& c : d.crossings)
    for (int* e : {&c.under_in, &c.under_out, &c.over_in, &c.over_out})
      if (*e == from) *e = to;
}

int linking_number(const LinkDiagram& d) {
  auto comps = d.traced_components();
  std::map<int, std::size_t> which;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int e : comps[i]) which[e] = i;
  int twice = 0;
  for (const auto& c : d.crossings)
    if (which[c.under_in] != which[c.over_in]) twice += c.sign;
  return twice / 2;
}

class Resolver {
 public:
  Resolver(SkeinStats& stats, const SkeinOptions& opts) : stats_(stats), opts_(opts) {}

  LaurentPoly run(const LinkDiagram& d) {
    std::string key = encode(d);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    if (++stats_.nodes > opts_.budget)
      fail(ErrorCode::RecursionBudgetExceeded, "skein recursion exceeded " + std::to_string(opts_.budget) + " diagrams");
    const int mu = d.component_count();
    LaurentPoly result;
    if (d.free_loops > 0 && mu > 1) {
      result = LaurentPoly();
    } else {
      long bad = first_bad_crossing(d);
      if (bad < 0) {
        result = mu == 1 ? LaurentPoly(1) : LaurentPoly();
      } else {
        const auto idx = static_cast<std::size_t>(bad);
        const int sign = d.crossings[idx].sign;
        LaurentPoly switched = run(switch_crossing(d, idx));
        LaurentPoly smoothed = run(smooth(d, idx));
        LaurentPoly zterm = smoothed.shifted(1);
        if (opts_.corrupt_skein) zterm = -zterm;
        result = sign > 0 ? switched + zterm : switched - zterm;
        // nabla(L+) - nabla(L-) = z nabla(L0)
        const LaurentPoly& plus = sign > 0 ? result : switched;
        const LaurentPoly& minus = sign > 0 ? switched : result;
        check(plus - minus == smoothed.shifted(1));
      }
    }
    check_shape(d, mu, result);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  void check(bool ok) {
    ++stats_.checks;
    if (!ok) ++stats_.check_failures;
  }

  void check_shape(const LinkDiagram& d, int mu, const LaurentPoly& p) {
    bool ok = true;
    for (const auto& [e, c] : p.terms())
      if (e < mu - 1 || (e - (mu - 1)) % 2 != 0 || c.get_den() != 1) ok = false;
    check(ok);
    if (mu == 1) check(p.coeff(0) == 1);
    if (mu == 2 && d.free_loops == 0) check(p.coeff(1) == linking_number(d));
  }

  SkeinStats& stats_;
  const SkeinOptions& opts_;
  std::map<std::string, LaurentPoly> memo_;
};

}  // namespace

long first_bad_crossing(const LinkDiagram& d) {
  std::map<int, std::pair<std::size_t, bool>> head;  // edge -> (crossing, arrives from below)
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    head[d.crossings[i].under_in] = {i, true};
    head[d.crossings[i].over_in] = {i, false};
  }
  std::set<std::size_t> visited;
  long best = -1;
  for (const auto& comp : d.traced_components())
    for (int e : comp) {
      auto [c, below] = head.at(e);
      if (visited.insert(c).second && below && (best < 0 || static_cast<long>(c) < best)) best = static_cast<long>(c);
    }
  return best;
}

LinkDiagram switch_crossing(const LinkDiagram& d, std::size_t index) {
  LinkDiagram out = d;
  auto& c = out.crossings.at(index);
  std::swap(c.under_in, c.over_in);
  std::swap(c.under_out, c.over_out);
  c.sign = -c.sign;
  return out;
}

LinkDiagram smooth(const LinkDiagram& d, std::size_t index) {
  const Crossing c = d.crossings.at(index);
  LinkDiagram out = d;
  out.crossings.erase(out.crossings.begin() + static_cast<long>(index));
  // under_in continues into over_out, over_in continues into under_out
  int a = c.under_in;
  int b = c.over_out;
  int x = c.over_in;
  int y = c.under_out;
  if (a == b) {
    ++out.free_loops;
  } else {
    relabel(out, b, a);
    if (x == b) x = a;
    if (y == b) y = a;
  }
  if (x == y) {
    ++out.free_loops;
  } else {
    relabel(out, y, x);
  }
  return out;
}

LaurentPoly conway_skein(const LinkDiagram& d, SkeinStats* stats, const SkeinOptions& opts) {
  SkeinStats local;
  SkeinStats& s = stats ? *stats : local;
  Resolver r(s, opts);
  return r.run(d);
}

}  // namespace torsionlab
