#pragma once

#include <optional>

#include "goodstein/evaluate.hpp"
#include "goodstein/form.hpp"

namespace goodstein {

struct TowerSpec {
  Base base;
  std::uint64_t levels;  // >= 1
};

// Exact form of the k-level power tower a^(a^(...^a)) over base a, built
// symbolically with unit coefficients. One level is a itself; zero levels
// are rejected.
HForm tower_form(Base a, std::uint64_t k);

// Value of the k-level tower, subject to the usual digit cap.
std::optional<BigNat> superexp_value(Base a, std::uint64_t k,
                                     std::uint64_t digit_cap = kDefaultDigitCap);

// Minimal n >= 1 whose n-level tower over a reaches b, found by iterated
// exact ceiling logarithms: replace b by the least e with a^e >= b until it
// drops to a or below.
std::uint64_t tower_bound(Base a, const BigNat& b);

// a^b - 1 == (a - 1) * (a^(b-1) + ... + a + 1), both sides evaluated
// independently with exact arithmetic (the right side as a literal sum).
// a == 1 degenerates to 0 == 0.
bool geometric_decrement_identity(std::uint64_t a, std::uint64_t b);

}  // namespace goodstein
