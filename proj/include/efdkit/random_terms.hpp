#pragma once

#include <cstdint>
#include <random>

#include "efdkit/term.hpp"

namespace efdkit {

struct TermGenOptions {
  Signature signature = Signature::Group;
  int x_vars = 3;
  int z_vars = 0;
  int max_depth = 5;
  // scalar coefficients; negative ones only appear in group terms
  std::int64_t coef_min = -6;
  std::int64_t coef_max = 6;
  int max_power = 3;
};

/// Random term using every operation the signature admits.
Term random_term(std::mt19937_64& rng, const TermGenOptions& opt);

}  // namespace efdkit
