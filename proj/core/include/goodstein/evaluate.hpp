#pragma once

#include <cmath>
#include <optional>

#include "goodstein/form.hpp"

namespace goodstein {

inline constexpr std::uint64_t kDefaultDigitCap = 1'000'000;

// Upper bound on the decimal digit count of f's value, from one level of
// logarithmic reduction: the leading exponent is evaluated exactly and
// multiplied by log10(base). Zero for the zero form. Returns +infinity (the
// "astronomical" marker) when the leading exponent is itself too large to
// evaluate. Monotone in the value for block-free forms over a common base.
double estimate_digits(const HForm& f);

inline bool is_astronomical(double digit_estimate) {
  return std::isinf(digit_estimate);
}

// Exact value of f, or nullopt ("too large") when the digit estimate
// exceeds digit_cap. Blocks evaluate through the closed geometric sum
// coeff * (base^hi - base^lo) / (base - 1), so the result is independent of
// how the form is compressed.
std::optional<BigNat> evaluate(const HForm& f,
                               std::uint64_t digit_cap = kDefaultDigitCap);

}  // namespace goodstein
