#pragma once

#include <cstdint>
#include <random>

#include "goodstein/form.hpp"

namespace goodstein {

struct RandomFormOptions {
  std::uint64_t base_min = 2;
  std::uint64_t base_max = 16;
  bool allow_blocks = true;   // emit compressed Run terms
  std::uint64_t max_terms = 6;
  std::uint64_t max_block_width = 40;
  std::uint64_t max_digits10 = 300;  // rough bound on the value
};

// Deterministic canonical form generator for the randomized suites. Regions
// are laid out top-down with random gaps (occasionally touching, never
// overlapping), so the output is canonical by construction and always
// nonzero.
HForm random_form(std::mt19937_64& rng, const RandomFormOptions& options);

}  // namespace goodstein
