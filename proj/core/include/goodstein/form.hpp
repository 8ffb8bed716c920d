#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "goodstein/bignat.hpp"

namespace goodstein {

// A positional base. Hereditary representations exist for bases >= 2 only.
class Base {
 public:
  explicit Base(std::uint64_t value);
  std::uint64_t value() const { return value_; }
  friend bool operator==(Base, Base) = default;

 private:
  std::uint64_t value_;
};

class FormNode;

// Shared immutable subtree. Null never appears in a well-formed value; the
// zero form is a node with an empty term list.
using NodePtr = std::shared_ptr<const FormNode>;

// coeff * base^exp
struct Atom {
  std::uint64_t coeff;
  NodePtr exp;
};

// coeff * (base^lo + base^(lo+1) + ... + base^(hi_excl - 1)). The interval
// is half open so that removing the bottom exponent never needs a
// predecessor; a block is never empty (lo < hi_excl). Upper bounds produced
// by decrement are written as "top exponent plus an uncarried unit", so
// their final exponent-zero coefficient may equal the base; that form keeps
// the covered exponent count intact when every base literal is replaced.
struct Run {
  std::uint64_t coeff;
  NodePtr lo;
  NodePtr hi_excl;
};

using Term = std::variant<Atom, Run>;

// One level of a hereditary representation: terms sorted so that every
// exponent covered by terms[i] exceeds every exponent covered by
// terms[i + 1] (adjacent blocks may touch but never overlap). A node does
// not know its base: paired with a base it denotes a number, on its own it
// denotes a base-erased shape.
class FormNode {
 public:
  FormNode() = default;
  explicit FormNode(std::vector<Term> terms) : terms_(std::move(terms)) {}

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

 private:
  std::vector<Term> terms_;
};

// Shared empty node.
const NodePtr& zero_node();

NodePtr make_node(std::vector<Term> terms);

bool structurally_equal(const NodePtr& a, const NodePtr& b);

// Hereditary base-b normal form: every coefficient lies in [1, b) and every
// exponent is itself such a form over the same base. Values are immutable;
// operations return fresh forms sharing unchanged subtrees.
class HForm {
 public:
  HForm(Base base, NodePtr node);

  Base base() const { return base_; }
  const NodePtr& node() const { return node_; }
  bool is_zero() const { return node_->is_zero(); }

 private:
  Base base_;
  NodePtr node_;
};

bool structurally_equal(const HForm& a, const HForm& b);

// Checked constructor: validates every canonicity invariant and throws
// validation_error on the first violation. HForm's own constructor trusts
// its caller; use this one for hand-assembled term lists.
HForm make_form(Base base, std::vector<Term> terms);

void validate_canonical(const HForm& f);

// Unique hereditary representation of m over the given base. The result is
// block-free: compressed Run terms only ever arise from decrement.
HForm from_natural(const BigNat& m, Base base);

// f + 1: adds one to the exponent-zero coefficient and normalizes carries
// (a coefficient reaching the base is absorbed into the next power,
// recursively). Never introduces Run terms.
HForm successor(const HForm& f);

// f - 1 for nonzero f, computed structurally on the minimal-exponent term.
// A borrow against base^E expands into the compressed block
// (base-1) * (base^0 + ... + base^(E-1)) instead of materializing E terms.
HForm decrement(const HForm& f);

// Reads the same structure over a strictly larger base. Coefficients and
// the shape are untouched; the result shares f's entire tree.
HForm bump(const HForm& f, Base new_base);

// Exact numeric order of two forms over the same base, decided by a
// top-down sweep over exponent regions without evaluating anything: the
// largest exponent at which the coefficients differ wins. Block tops are
// handled by comparing upper bounds ("top of [lo,H) versus atom exponent E"
// becomes "H versus E+1"), so no predecessor is ever taken.
std::strong_ordering compare_value(const HForm& f, const HForm& g);

}  // namespace goodstein
