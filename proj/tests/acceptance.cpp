// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <string>

#include "happy/verify.hpp"

namespace {

struct Outcome {
  bool pass = true;
  int failed = 0;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void report(Outcome& total, int number, const char* name,
            const happy::VerifyResult& result, double elapsed,
            const std::string& extra = "") {
  bool pass = result.pass;
  std::printf("criterion %d [%s] %-14s %5lld cases  %6.1fs%s%s\n", number,
              pass ? "PASS" : "FAIL", name, result.cases, elapsed,
              extra.empty() ? "" : "  ", extra.c_str());
  for (const auto& f : result.failures) std::printf("    %s\n", f.c_str());
  if (!pass) {
    total.pass = false;
    ++total.failed;
  }
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  Outcome total;
  auto suite_start = clock::now();

  {
    auto start = clock::now();
    auto r = happy::verify_cluster_fpt(200, 1);
    double elapsed = seconds_since(start);
    if (elapsed > 60.0) r.fail("exceeded the 60 second budget");
    report(total, 1, "fpt-vs-oracle", r, elapsed);
  }
  {
    auto start = clock::now();
    auto r = happy::verify_gmc_correspondence(200, 10'000);
    report(total, 2, "gmc-bridge", r, seconds_since(start));
  }
  {
    auto start = clock::now();
    auto r = happy::verify_kernels(100, 20'000);
    report(total, 3, "kernels", r, seconds_since(start));
  }
  {
    auto start = clock::now();
    auto r = happy::verify_nmc_cw(100, 30'000);
    report(total, 4, "nmc-cw", r, seconds_since(start));
  }
  {
    // Criteria 5 and 7 run in one exhaustive sweep: equivalence and
    // threshold formulas on one side, selector-deletion structure on the
    // other.
    auto start = clock::now();
    auto r = happy::verify_gadgets(6);
    double elapsed = seconds_since(start);
    happy::VerifyResult equiv, structure;
    equiv.cases = structure.cases = r.cases;
    for (const auto& f : r.failures) {
      if (f.find("structure") != std::string::npos)
        structure.fail(f);
      else
        equiv.fail(f);
    }
    if (!r.pass && equiv.pass && structure.pass) equiv.fail("details lost");
    report(total, 5, "gadget-equiv", equiv, elapsed);
    report(total, 7, "gadget-shape", structure, elapsed);
  }
  {
    auto start = clock::now();
    auto r = happy::verify_modulators(100, 40'000);
    report(total, 6, "modulators", r, seconds_since(start));
  }
  {
    auto start = clock::now();
    auto r = happy::verify_io_roundtrip(1000, 50'000);
    report(total, 8, "io-roundtrip", r, seconds_since(start));
  }

  double wall = seconds_since(suite_start);
  std::printf("acceptance %s: %d criterion(s) failed, %.1fs total\n",
              total.pass ? "PASS" : "FAIL", total.failed, wall);
  return total.pass ? 0 : 1;
}
