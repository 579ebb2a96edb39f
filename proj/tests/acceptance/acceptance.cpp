// One line per acceptance criterion; exit status 1 when any line is FAIL.
#include <cstdio>
#include <string>

#include "efdkit/selftest.hpp"

using namespace efdkit;

namespace {

struct Criterion {
  int id;
  const char* suite;
  const char* what;
  double limit_s;
};

constexpr Criterion kCriteria[] = {
    {1, "piecewise-soundness", "200 group terms x 1000 points, exact", 60},
    {2, "reduction-oracle", ">= 50 delta_{k,t} instances x S in {2,3,5}", 120},
    {3, "fulldim-oracle", "exhaustive n <= 3, <= 3 rows, coefficients in [-3,3]", 120},
    {4, "endomorphism", "t_k on Gamma(Z x Q), 1000 pairs, k in {2,3,5}", 10},
    {5, "star-transfer", "delta_k vs delta_k* on Q_S, 100 hoop terms x 100 points", 30},
    {6, "mv-classification", "epsilon_k for k <= 12, epsilon_p on Gamma(Z x Q_S)", 30},
    {7, "decomposition", "epsilon_2, epsilon_3 on Gamma(Z x Q), Gamma(Z x Q_{2}), 500 samples", 60},
    {8, "lattice-laws", "1+2^3, 2+2^3, duals, 500 random pairs, duality", 10},
};

}  // namespace

int main() {
  bool all = true;
  for (const auto& c : kCriteria) {
    const SuiteReport r = run_suite(c.suite);
    std::size_t checks = 0, failures = 0;
    for (const auto& p : r.properties) {
      checks += p.checks;
      failures += p.failures;
    }
    bool ok = r.pass() && r.seconds < c.limit_s;
    if (c.id == 2) {
      for (const auto& p : r.properties) {
        for (const auto& [k, v] : p.notes) {
          if (k == "instances" && v < 50) ok = false;
        }
      }
    }
    all = all && ok;
    std::printf("%s C%d %-19s %s: %zu checks, %zu failures, %.1f s (limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id,
                c.suite, c.what, checks, failures, r.seconds, c.limit_s);
    if (!ok) {
      for (const auto& p : r.properties) {
        if (p.pass()) continue;
        std::printf("    %s: %zu/%zu failed\n", p.name.c_str(), p.failures, p.checks);
        for (const auto& ce : p.counterexamples) std::printf("      %s\n", ce.c_str());
      }
    }
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
