#pragma once

// Node-level algorithms shared by the form, shape, grammar and evaluation
// translation units. Nodes carry no base, so the same sweep serves numeric
// comparison (base >= 2, carries at the base) and shape comparison (base 0,
// ordinal successor, no carries).

#include <compare>
#include <cstdint>

#include "goodstein/form.hpp"

namespace goodstein::detail {

// Shared node for the value one (a unit at exponent zero).
const NodePtr& one_node();

NodePtr node_from_natural(const BigNat& m, std::uint64_t base);

// n + base^e. Splits or collapses any block the carry lands in; a block of
// coefficient base-1 absorbed from below telescopes straight to base^hi.
NodePtr node_add_power(const NodePtr& n, const NodePtr& e, std::uint64_t base);

NodePtr node_successor(const NodePtr& n, std::uint64_t base);

// Ordinal successor: bumps the unit coefficient at exponent zero without
// ever carrying. Used when comparing shapes.
NodePtr node_successor_ordinal(const NodePtr& n);

// Precondition: n nonzero.
NodePtr node_decrement(const NodePtr& n, std::uint64_t base);

// Block upper bounds are kept in carry-suppressed form: the bound one past
// a top exponent T is stored as T plus a unit at exponent zero, leaving a
// coefficient equal to the base rather than carrying. That form reads the
// same count of exponents under any base, which is what keeps a pure
// structural base replacement value-faithful on blocks. This helper resolves
// the suppressed carry when a bound has to be used as a number.
NodePtr normalize_carry(const NodePtr& n, std::uint64_t base);

// base == 0 selects shape semantics at block boundaries.
std::strong_ordering compare_nodes(const NodePtr& a, const NodePtr& b,
                                   std::uint64_t base);

bool node_equal(const NodePtr& a, const NodePtr& b);

// Throws validation_error. coeff_bound 0 disables the coefficient cap
// (shapes); cmp_base 0 selects shape order for the sortedness checks.
// relaxed_tail permits the final exponent-zero coefficient to reach the
// bound exactly (the carry-suppressed bound form); it is set when
// descending into block endpoints.
void validate_node(const NodePtr& n, std::uint64_t coeff_bound,
                   std::uint64_t cmp_base, bool relaxed_tail);

}  // namespace goodstein::detail
