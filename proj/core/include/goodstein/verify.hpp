#pragma once

#include <cstdint>
#include <string>

#include "goodstein/form.hpp"
#include "goodstein/sequence.hpp"

namespace goodstein {

struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // rendered counterexample

  bool ok() const { return failures == 0; }
};

// a^b - 1 identity over 2 <= a <= a_max, 1 <= b <= b_max.
SuiteReport verify_identity_suite(std::uint64_t a_max, std::uint64_t b_max);

// Pairwise order preservation, classic increments: every 1 <= y < x <= x_max
// over the given number of steps from base 2.
SuiteReport verify_monotone_classic(std::uint64_t x_max, std::uint64_t steps);

// Same sweep under `schedules` seeded increment schedules with d in
// [1, d_max], seeds seed, seed+1, ...
SuiteReport verify_monotone_schedules(std::uint64_t x_max, std::uint64_t steps,
                                      std::uint64_t schedules, std::uint64_t d_max,
                                      std::uint64_t seed, Base base0);

// Steps the sequence from `start`, checking strict measure decrease, shape
// stability under base replacement, and that no shape ever repeats.
SuiteReport verify_ordinal_trace(const HForm& start, const Schedule& schedule,
                                 std::uint64_t steps);

// Random same-base pairs: symbolic comparison against plain integer order.
// Block-free pairs are additionally compared through their shapes.
SuiteReport verify_compare_oracle(std::uint64_t cases, std::uint64_t seed);

// Random canonical forms: decrement's value must drop by exactly one, both
// under the engine evaluator and under element-by-element expansion, and
// stay canonical.
SuiteReport verify_decrement_oracle(std::uint64_t cases, std::uint64_t seed);

}  // namespace goodstein
