#include "goodstein/shape.hpp"

#include <stdexcept>
#include <utility>

#include "goodstein/grammar.hpp"
#include "node_ops.hpp"

namespace goodstein {

Shape::Shape(NodePtr node) : node_(std::move(node)) {
  if (!node_) throw std::invalid_argument("null node");
}

Shape shape_of(const HForm& f) { return Shape(f.node()); }

Shape make_shape(std::vector<Term> terms) {
  Shape s(make_node(std::move(terms)));
  detail::validate_node(s.node(), 0, 0, false);
  return s;
}

bool structurally_equal(const Shape& a, const Shape& b) {
  return detail::node_equal(a.node(), b.node());
}

std::strong_ordering compare_shape(const Shape& a, const Shape& b) {
  return detail::compare_nodes(a.node(), b.node(), 0);
}

StepDecrease check_step_decrease(const HForm& before, const HForm& after,
                                 Base new_base) {
  if (before.is_zero()) {
    return {false, "step from zero has no measure to decrease"};
  }
  HForm bumped = bump(before, new_base);
  if (!structurally_equal(shape_of(bumped), shape_of(before))) {
    return {false, "base replacement changed the shape: " +
                       render(shape_of(before)) + " became " +
                       render(shape_of(bumped))};
  }
  if (compare_value(after, bumped) != std::strong_ordering::less) {
    return {false, "value did not drop below the replaced form: " +
                       render(after) + " vs " + render(bumped)};
  }
  if (compare_shape(shape_of(after), shape_of(before)) !=
      std::strong_ordering::less) {
    return {false, "shape did not decrease: " + render(shape_of(after)) +
                       " vs " + render(shape_of(before))};
  }
  return {true, ""};
}

}  // namespace goodstein
