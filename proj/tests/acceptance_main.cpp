// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <cstdio>

#include <CLI11.hpp>

#include "verify/acceptance.hpp"

int main(int argc, char** argv) {
  torsionlab::AcceptanceOptions opts;
  bool timing = false;
  CLI::App app{"torsionlab acceptance criteria"};
  app.add_option("--fixtures", opts.fixtures_dir, "PD fixture directory");
  app.add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--corrupt-sign-table", opts.corrupt_sign_table, "negative control: wrong sign residues");
  app.add_flag("--timing", timing, "append wall time per criterion");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const auto& r : torsionlab::run_acceptance(opts)) {
    std::printf("%s [%d] %s: %s", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
    if (timing) std::printf(" (%.1f ms)", r.millis);
    std::printf("\n");
    failed += !r.pass;
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed ? 1 : 0;
}
