#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goodstein {

// Text that does not match the form grammar. position() is the byte offset
// of the offending token.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammatically valid input (or hand-assembled terms) that violates a
// canonicity invariant: zero coefficient, coefficient at or above the base,
// unsorted or overlapping terms, empty block, mismatched base literals.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace goodstein
