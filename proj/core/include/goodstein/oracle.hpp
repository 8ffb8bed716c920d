#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "goodstein/form.hpp"

// Reference computations used to cross-check the symbolic engine. Everything
// here works on plain arbitrary-precision integers, or expands compressed
// blocks one exponent at a time, and deliberately shares no code with the
// engine paths it is checked against.
namespace goodstein::oracle {

// Value of a form with every block expanded element by element (no closed
// geometric sum, no digit gate). Exponents must be small enough to
// materialize; intended for generated test forms.
BigNat eval_expanded(const HForm& f);

// Hereditary rewrite of v from base `from` to base `to`: expand v into
// digits, rewrite each exponent recursively, reassemble over `to`.
BigNat rebase_value(const BigNat& v, std::uint64_t from, std::uint64_t to);

// Simulates the sequence on plain integers: v <- rebase(v) - 1 under the
// given increments. Returns all values including the starting one; stops at
// zero or when the increments run out.
std::vector<BigNat> sequence_values(const BigNat& m, std::uint64_t base0,
                                    const std::vector<std::uint64_t>& increments);

// Steps until the simulated sequence reaches zero, nullopt if the increment
// list ran out first.
std::optional<std::uint64_t> steps_to_zero(const BigNat& m, std::uint64_t base0,
                                           const std::vector<std::uint64_t>& increments);

// Minimal n >= 1 with the n-level tower over a reaching b, by direct
// ascent. Towers are materialized only while below b, so b must fit well
// inside 64 bits.
std::uint64_t tower_bound_small(std::uint64_t a, std::uint64_t b);

}  // namespace goodstein::oracle
