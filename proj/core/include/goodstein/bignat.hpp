#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace goodstein {

// Arbitrary-precision natural. Negative values never occur in this library;
// every operation stays within the naturals.
using BigNat = boost::multiprecision::cpp_int;

// Parses a plain decimal literal: digits only, no sign, no leading zeros
// (except "0" itself). Returns nullopt on anything else.
std::optional<BigNat> parse_decimal(std::string_view text);

std::string to_decimal(const BigNat& v);

}  // namespace goodstein
