#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "efdkit/json.hpp"

namespace efdkit {

struct PropertyResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// The first few failing cases, printed.
  std::vector<std::string> counterexamples;
  /// Free-form counters (resampled terms, uncertified systems, ...).
  std::vector<std::pair<std::string, std::size_t>> notes;

  bool pass() const noexcept { return failures == 0 && checks > 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::vector<PropertyResult> properties;
  /// Wall-clock time; kept out of the JSON so reports are reproducible.
  double seconds = 0;

  bool pass() const;
};

/// endomorphism, reduction-oracle, lattice-laws, piecewise-soundness,
/// fulldim-oracle, star-transfer, mv-classification, decomposition.
const std::vector<std::string>& suite_names();

/// The suite's main sample count when none is given.
std::size_t default_budget(const std::string& suite);

/// Runs a suite; budget 0 selects the default. Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed = kDefaultSeed, std::size_t budget = 0);

Json to_json(const SuiteReport& r);

}  // namespace efdkit
