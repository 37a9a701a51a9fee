// Compares the serial reference lane of the framework checkers against the
// OpenMP lane and verifies the reports are identical.

#include "polysyn/framework.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace polysyn;

double time_ms(const std::function<CheckReport()>& run, CheckReport& out) {
  auto start = std::chrono::steady_clock::now();
  out = run();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t samples = 2000;
  std::uint64_t seed = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--samples") samples = std::stoull(argv[i + 1]);
    if (flag == "--seed") seed = std::stoull(argv[i + 1]);
  }

#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp threads: 1 (compiled without OpenMP)\n";
#endif
  std::cout << "samples: " << samples << "  seed: " << seed << "\n\n";

  FrameworkInstance local = local_instance();
  struct Row {
    std::string name;
    std::function<CheckReport(RunMode)> run;
  };
  std::vector<Row> rows = {
      {"quotation-axiom",
       [&](RunMode m) { return check_quotation_axiom(local, samples, seed, m); }},
      {"evaluation-axiom",
       [&](RunMode m) { return check_evaluation_axiom(local, samples, seed, m); }},
      {"disquotation",
       [&](RunMode m) { return check_disquotation(local, samples, seed, m); }},
      {"comp-behavior", [&](RunMode m) { return check_comp_behavior(samples, seed, m); }},
      {"math-meaning", [&](RunMode m) { return check_math_meaning(samples, seed, m); }},
  };

  bool all_match = true;
  std::printf("%-18s %12s %12s %9s\n", "check", "serial (ms)", "parallel(ms)", "speedup");
  for (const auto& row : rows) {
    CheckReport serial_report, parallel_report;
    double serial_ms = time_ms([&] { return row.run(RunMode::Serial); }, serial_report);
    double parallel_ms = time_ms([&] { return row.run(RunMode::Parallel); }, parallel_report);
    bool match = serial_report.to_text() == parallel_report.to_text();
    all_match = all_match && match && serial_report.pass();
    std::printf("%-18s %12.1f %12.1f %8.2fx%s\n", row.name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms, match ? "" : "  REPORT MISMATCH");
  }
  std::cout << (all_match ? "\nall reports identical across lanes\n"
                          : "\nlane mismatch detected\n");
  return all_match ? 0 : 1;
}
