// Runs each acceptance suite and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "triolab/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"triolab acceptance"};
  triolab::SuiteOptions opt;
  app.add_option("--workers", opt.workers)->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed);
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (const auto& s : triolab::suite_list()) {
    if (s.criterion <= 0) continue;
    const auto t0 = std::chrono::steady_clock::now();
    triolab::SuiteResult r;
    std::string note;
    try {
      r = triolab::run_suite(s.name, opt);
    } catch (const std::exception& e) {
      note = std::string(" (threw: ") + e.what() + ")";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s [%ld checks, %.1fs]%s\n", r.pass ? "PASS" : "FAIL", s.criterion,
                s.summary.c_str(), r.checked, secs, note.c_str());
    if (!r.pass && !r.detail.empty()) std::printf("  %s\n", r.detail.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
