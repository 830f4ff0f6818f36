// torsionlab command line. Reports are "key: value" lines in a fixed order.
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torsionlab/torsionlab.h"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Owned {
  char* p = nullptr;
  ~Owned() { tl_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct InputError {
  std::string message;
};

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// A path, or a fixture name such as "trefoil_left" looked up in the
// fixtures directory.
std::string read_input(const std::string& path) {
  std::string resolved = path;
  if (!std::filesystem::exists(resolved)) {
    Owned dir;
    if (tl_fixtures_dir(&dir.p) == TL_OK) {
      std::string candidate = dir.str() + "/" + path + (path.ends_with(".pd") ? "" : ".pd");
      if (std::filesystem::exists(candidate)) resolved = candidate;
    }
  }
  std::ifstream in(resolved, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Report {
 public:
  Report(std::string command, bool quiet) : quiet_(quiet) { add("command", std::move(command)); }

  void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  void headline(const std::string& value) { headline_ = value; }

  int finish(int code) {
    add("status", code == kPass ? "ok" : code == kCheckFailed ? "check-failed" : "input-error");
    if (quiet_) {
      if (code == kInputError) {
        for (const auto& [k, v] : lines_)
          if (k == "error") std::cerr << v << "\n";
      } else {
        std::cout << headline_ << "\n";
      }
      return code;
    }
    for (const auto& [k, v] : lines_) std::cout << k << ": " << v << "\n";
    return code;
  }

  int fail_status(int status) {
    add("error", tl_last_error());
    add("error_code", std::to_string(status) + " " + tl_status_name(status));
    return finish(kInputError);
  }

 private:
  bool quiet_;
  std::string headline_;
  std::vector<std::pair<std::string, std::string>> lines_;
};

struct Options {
  std::string file;
  std::string field;
  std::string at;
  std::string fixtures;
  int jobs = 1;
  bool quiet = false;
  bool timing = false;
  bool corrupt_sign_table = false;
};

int chain_torsion(const Options& o) {
  Report r("chain-torsion", o.quiet);
  std::string text;
  try {
    text = read_input(o.file);
  } catch (const InputError& e) {
    r.add("error", e.message);
    return r.finish(kInputError);
  }
  r.add("input", o.file);
  r.add("input_digest", fnv1a64(text));
  tl_complex* c = nullptr;
  int st = tl_complex_parse(text.c_str(), o.field.empty() ? nullptr : o.field.c_str(), &c);
  if (st != TL_OK) return r.fail_status(st);
  Owned field, torsion, alpha, beta;
  int n = 0;
  tl_complex_field(c, &field.p);
  st = tl_complex_torsion(c, &torsion.p, &n, &alpha.p, &beta.p);
  tl_complex_free(c);
  if (st != TL_OK) return r.fail_status(st);
  r.add("field", field.str());
  r.add("torsion", torsion.str());
  r.add("N", std::to_string(n));
  r.add("alpha", alpha.str());
  r.add("beta", beta.str());
  r.headline(torsion.str());
  return r.finish(kPass);
}

int knot(const std::string& sub, const Options& o) {
  Report r("knot " + sub, o.quiet);
  std::string text;
  try {
    text = read_input(o.file);
  } catch (const InputError& e) {
    r.add("error", e.message);
    return r.finish(kInputError);
  }
  r.add("input", o.file);
  r.add("input_digest", fnv1a64(text));
  tl_knot* k = nullptr;
  int st = tl_knot_parse(text.c_str(), &k);
  if (st != TL_OK) return r.fail_status(st);
  struct Free {
    tl_knot* k;
    ~Free() { tl_knot_free(k); }
  } guard{k};
  int crossings = 0, components = 0, writhe = 0;
  tl_knot_info(k, &crossings, &components, &writhe);
  r.add("crossings", std::to_string(crossings));
  r.add("components", std::to_string(components));
  r.add("writhe", std::to_string(writhe));

  if (sub == "conway") {
    Owned p;
    if ((st = tl_knot_conway(k, &p.p)) != TL_OK) return r.fail_status(st);
    r.add("conway", p.str());
    r.headline(p.str());
    return r.finish(kPass);
  }
  if (sub == "conway-skein") {
    Owned p;
    size_t nodes = 0, checks = 0, failures = 0;
    if ((st = tl_knot_conway_skein(k, &p.p, &nodes, &checks, &failures)) != TL_OK) return r.fail_status(st);
    r.add("conway", p.str());
    r.add("skein_nodes", std::to_string(nodes));
    r.add("skein_checks", std::to_string(checks));
    r.add("skein_check_failures", std::to_string(failures));
    r.headline(p.str());
    return r.finish(failures == 0 ? kPass : kCheckFailed);
  }
  if (sub == "alexander") {
    Owned p;
    int sign = 0;
    if ((st = tl_knot_alexander(k, &p.p, &sign)) != TL_OK) return r.fail_status(st);
    r.add("alexander", p.str());
    r.add("sign_at_one", std::to_string(sign));
    r.headline(p.str());
    return r.finish(kPass);
  }
  if (sub == "abs-torsion") {
    r.add("a", o.at);
    Owned t, c;
    if ((st = tl_knot_abs_torsion(k, o.at.c_str(), &t.p, &c.p)) != TL_OK) return r.fail_status(st);
    r.add("abs_torsion", t.str());
    r.add("conway_at_a", c.str());
    r.headline(t.str());
    return r.finish(kPass);
  }
  // verify
  Owned p, report;
  int all = 0;
  if ((st = tl_knot_conway(k, &p.p)) != TL_OK) return r.fail_status(st);
  r.add("conway", p.str());
  if ((st = tl_knot_verify(k, o.jobs, &report.p, &all)) != TL_OK) return r.fail_status(st);
  std::istringstream lines(report.str());
  for (std::string line; std::getline(lines, line);) {
    auto colon = line.find(": ");
    r.add("check." + line.substr(0, colon), line.substr(colon + 2));
  }
  r.add("result", all ? "PASS" : "FAIL");
  r.headline(all ? "PASS" : "FAIL");
  return r.finish(all ? kPass : kCheckFailed);
}

int selftest(const Options& o) {
  Report r("selftest", o.quiet);
  Owned report;
  int all = 0;
  int st = tl_selftest(o.fixtures.empty() ? nullptr : o.fixtures.c_str(), o.jobs, o.corrupt_sign_table ? 1 : 0,
                       o.timing ? 1 : 0, &report.p, &all);
  if (st != TL_OK) return r.fail_status(st);
  std::istringstream lines(report.str());
  int n = 0;
  for (std::string line; std::getline(lines, line);) r.add("criterion." + std::to_string(++n), line);
  r.add("result", all ? "PASS" : "FAIL");
  r.headline(all ? "PASS" : "FAIL");
  return r.finish(all ? kPass : kCheckFailed);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Reidemeister torsion, Euler structures and knot invariants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tl_version());

  auto* chain = app.add_subcommand("chain-torsion", "torsion coordinate of a chain complex file");
  chain->add_option("file", o.file, "complex file")->required();
  chain->add_option("--field", o.field, "override the field line")
      ->check(CLI::IsMember({"rational", "laurent", "ratfunc", "complex"}));
  chain->add_flag("--quiet", o.quiet, "print only the torsion");

  auto* knot_cmd = app.add_subcommand("knot", "knot invariants from a PD code");
  knot_cmd->require_subcommand(1);
  std::vector<std::pair<std::string, std::string>> subs = {
      {"conway", "Conway polynomial through the torsion pipeline"},
      {"conway-skein", "Conway polynomial by skein recursion"},
      {"alexander", "Alexander polynomial"},
      {"abs-torsion", "absolute torsion T(F_a) of the 0-surgery"},
      {"verify", "run both Conway pipelines and the torsion checks"},
  };
  for (const auto& [name, help] : subs) {
    auto* s = knot_cmd->add_subcommand(name, help);
    s->add_option("file", o.file, "PD file or fixture name")->required();
    s->add_flag("--quiet", o.quiet, "print only the headline value");
    if (name == "abs-torsion") s->add_option("--at", o.at, "a, rational or complex (x+yi, cis:theta)")->required();
    if (name == "verify") s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  }

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  self->add_option("--fixtures", o.fixtures, "PD fixture directory");
  self->add_flag("--timing", o.timing, "append wall time per criterion");
  self->add_flag("--corrupt-sign-table", o.corrupt_sign_table, "negative control: use wrong sign residues");
  self->add_flag("--quiet", o.quiet, "print only PASS or FAIL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (chain->parsed()) return chain_torsion(o);
  if (self->parsed()) return selftest(o);
  for (auto* s : knot_cmd->get_subcommands())
    if (s->parsed()) return knot(s->get_name(), o);
  return kInputError;
}
