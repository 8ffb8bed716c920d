#pragma once

#include <compare>
#include <string>

#include "goodstein/form.hpp"

namespace goodstein {

// Base-erased image of a hereditary form. Shapes share the node
// representation of forms, they just drop the base, so taking the shape is
// free and reading the base symbol as an infinite quantity turns a shape
// into an ordinal-style termination measure: replacing the base cannot
// change the shape, while subtracting one strictly lowers it.
class Shape {
 public:
  explicit Shape(NodePtr node);

  const NodePtr& node() const { return node_; }
  bool is_zero() const { return node_->is_zero(); }

 private:
  NodePtr node_;
};

Shape shape_of(const HForm& f);

// Checked constructor for hand-assembled shapes. Coefficients are arbitrary
// positive naturals here; ordering and block invariants still apply.
Shape make_shape(std::vector<Term> terms);

bool structurally_equal(const Shape& a, const Shape& b);

// Total order on shapes, decided by the same region sweep as compare_value.
// With no base available, the "+1" at block boundaries is the ordinal
// successor (a bumped unit at exponent zero, never a carry), so shape order
// and numeric order can part ways at block tops; they agree wherever both
// sides are block-free, and on every before/after pair an engine step
// produces.
std::strong_ordering compare_shape(const Shape& a, const Shape& b);

struct StepDecrease {
  bool ok;
  std::string detail;  // rendered shapes and the failed condition when !ok
};

// Termination measure for one engine step from `before` (nonzero) to
// `after` = decrement(bump(before, new_base)). Verifies that the base
// replacement left the shape untouched, that the decrement strictly lowered
// the value below the bumped form, and, directly, that the shape strictly
// decreased.
StepDecrease check_step_decrease(const HForm& before, const HForm& after,
                                 Base new_base);

}  // namespace goodstein
