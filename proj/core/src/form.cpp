#include "goodstein/form.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>

#include "goodstein/errors.hpp"
#include "node_ops.hpp"

namespace goodstein {
namespace detail {
namespace {

using std::strong_ordering;

const Atom* as_atom(const Term& t) { return std::get_if<Atom>(&t); }
const Run* as_run(const Term& t) { return std::get_if<Run>(&t); }

// Where e sits relative to the exponents a term covers.
enum class Rel { below, inside, above };

Rel relation(const NodePtr& e, const Term& t, std::uint64_t base) {
  if (const Atom* a = as_atom(t)) {
    strong_ordering c = compare_nodes(e, a->exp, base);
    if (c == strong_ordering::less) return Rel::below;
    if (c == strong_ordering::equal) return Rel::inside;
    return Rel::above;
  }
  const Run* r = as_run(t);
  if (compare_nodes(e, r->lo, base) == strong_ordering::less) return Rel::below;
  if (compare_nodes(e, r->hi_excl, base) == strong_ordering::less) return Rel::inside;
  return Rel::above;
}

// Cursor over a descending term list; the head may be a shrunken stand-in
// for the original first unconsumed term.
struct Cursor {
  std::span<const Term> rest;
  std::optional<Term> head;

  bool empty() const { return !head && rest.empty(); }
  Term current() const { return head ? *head : rest.front(); }
  void advance() {
    if (head) {
      head.reset();
    } else {
      rest = rest.subspan(1);
    }
  }
  void replace_current(Term t) {
    if (!head) rest = rest.subspan(1);
    head = std::move(t);
  }
};

NodePtr successor_for(const NodePtr& e, std::uint64_t base) {
  return base == 0 ? node_successor_ordinal(e) : node_successor(e, base);
}

// Bound one past the exponents [0, e): value-equal to e, but ending in an
// uncarried unit so the covered count is preserved verbatim when every base
// literal is replaced. Constants are already in that form and are shared.
NodePtr block_bound(const NodePtr& e, std::uint64_t base) {
  const auto& ts = e->terms();
  if (ts.size() == 1) {
    if (const Atom* a = as_atom(ts[0]); a && a->exp->is_zero()) return e;
  }
  return node_successor_ordinal(node_decrement(e, base));
}

}  // namespace

const NodePtr& one_node() {
  static const NodePtr one = make_node({Atom{1, zero_node()}});
  return one;
}

NodePtr node_from_natural(const BigNat& m, std::uint64_t base) {
  if (m == 0) return zero_node();
  std::vector<Term> terms;
  BigNat rest = m;
  std::uint64_t e = 0;
  while (rest != 0) {
    BigNat digit = rest % base;
    rest /= base;
    if (digit != 0) {
      terms.push_back(Atom{digit.convert_to<std::uint64_t>(),
                           node_from_natural(BigNat(e), base)});
    }
    ++e;
  }
  std::reverse(terms.begin(), terms.end());
  return make_node(std::move(terms));
}

NodePtr node_add_power(const NodePtr& n, const NodePtr& e, std::uint64_t base) {
  std::vector<Term> terms = normalize_carry(n, base)->terms();
  std::size_t pos = terms.size();
  std::size_t j = terms.size();
  while (j > 0) {
    --j;
    Rel rel = relation(e, terms[j], base);
    if (rel == Rel::below) {
      pos = j + 1;
      break;
    }
    if (rel == Rel::above) {
      pos = j;
      continue;
    }
    // e lands inside terms[j]
    if (const Atom* a = as_atom(terms[j])) {
      if (a->coeff + 1 < base) {
        terms[j] = Atom{a->coeff + 1, a->exp};
        return make_node(std::move(terms));
      }
      // coefficient reaches the base: absorb into the next power
      NodePtr carry_exp = successor_for(a->exp, base);
      terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(j));
      return node_add_power(make_node(std::move(terms)), carry_exp, base);
    }
    Run r = *as_run(terms[j]);
    terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(j));
    if (r.coeff + 1 < base) {
      // split the block around e
      auto it = terms.begin() + static_cast<std::ptrdiff_t>(j);
      if (compare_nodes(r.lo, e, base) == strong_ordering::less) {
        it = terms.insert(it, Run{r.coeff, r.lo, e});
      }
      it = terms.insert(it, Atom{r.coeff + 1, e});
      NodePtr up = successor_for(e, base);
      if (compare_nodes(up, r.hi_excl, base) == strong_ordering::less) {
        terms.insert(it, Run{r.coeff, up, r.hi_excl});
      }
      return make_node(std::move(terms));
    }
    // (base-1)-block: everything from e upward telescopes to base^hi
    if (compare_nodes(r.lo, e, base) == strong_ordering::less) {
      terms.insert(terms.begin() + static_cast<std::ptrdiff_t>(j),
                   Run{r.coeff, r.lo, e});
    }
    return node_add_power(make_node(std::move(terms)),
                          normalize_carry(r.hi_excl, base), base);
  }
  terms.insert(terms.begin() + static_cast<std::ptrdiff_t>(pos), Atom{1, e});
  return make_node(std::move(terms));
}

NodePtr node_successor(const NodePtr& n, std::uint64_t base) {
  return node_add_power(n, zero_node(), base);
}

NodePtr node_successor_ordinal(const NodePtr& n) {
  std::vector<Term> terms = n->terms();
  if (terms.empty()) return one_node();
  Term& last = terms.back();
  if (const Atom* a = as_atom(last)) {
    if (a->exp->is_zero()) {
      last = Atom{a->coeff + 1, a->exp};
    } else {
      terms.push_back(Atom{1, zero_node()});
    }
    return make_node(std::move(terms));
  }
  Run r = *as_run(last);
  if (!r.lo->is_zero()) {
    terms.push_back(Atom{1, zero_node()});
    return make_node(std::move(terms));
  }
  // the block touches exponent zero: peel its bottom element off
  terms.pop_back();
  if (compare_nodes(one_node(), r.hi_excl, 0) == strong_ordering::less) {
    terms.push_back(Run{r.coeff, one_node(), r.hi_excl});
  }
  terms.push_back(Atom{r.coeff + 1, zero_node()});
  return make_node(std::move(terms));
}

NodePtr node_decrement(const NodePtr& n, std::uint64_t base) {
  std::vector<Term> terms = n->terms();
  if (terms.empty()) throw std::invalid_argument("cannot decrement zero");
  Term last = terms.back();
  terms.pop_back();
  if (const Atom* a = as_atom(last)) {
    if (a->exp->is_zero()) {
      if (a->coeff > 1) terms.push_back(Atom{a->coeff - 1, a->exp});
    } else {
      if (a->coeff > 1) terms.push_back(Atom{a->coeff - 1, a->exp});
      terms.push_back(Run{base - 1, zero_node(), block_bound(a->exp, base)});
    }
    return make_node(std::move(terms));
  }
  const Run r = *as_run(last);
  if (r.lo->is_zero()) {
    if (compare_nodes(one_node(), r.hi_excl, base) == strong_ordering::less) {
      terms.push_back(Run{r.coeff, one_node(), r.hi_excl});
    }
    if (r.coeff > 1) terms.push_back(Atom{r.coeff - 1, zero_node()});
    return make_node(std::move(terms));
  }
  NodePtr lo_next = node_successor(r.lo, base);
  if (compare_nodes(lo_next, r.hi_excl, base) == strong_ordering::less) {
    terms.push_back(Run{r.coeff, lo_next, r.hi_excl});
  }
  if (r.coeff > 1) terms.push_back(Atom{r.coeff - 1, r.lo});
  terms.push_back(Run{base - 1, zero_node(), block_bound(r.lo, base)});
  return make_node(std::move(terms));
}

NodePtr normalize_carry(const NodePtr& n, std::uint64_t base) {
  const auto& ts = n->terms();
  if (ts.empty()) return n;
  const Atom* a = as_atom(ts.back());
  if (!a || !a->exp->is_zero() || a->coeff != base) return n;
  std::vector<Term> rest(ts.begin(), ts.end() - 1);
  return node_add_power(make_node(std::move(rest)), one_node(), base);
}

std::strong_ordering compare_nodes(const NodePtr& x, const NodePtr& y,
                                   std::uint64_t base) {
  if (x.get() == y.get()) return strong_ordering::equal;
  // Digit sweeps read positional value, so suppressed carries in block
  // bounds must be resolved first; shapes (base 0) compare as written.
  const NodePtr nx = base == 0 ? x : normalize_carry(x, base);
  const NodePtr ny = base == 0 ? y : normalize_carry(y, base);
  if (nx.get() == ny.get()) return strong_ordering::equal;
  Cursor cx{std::span<const Term>(nx->terms()), std::nullopt};
  Cursor cy{std::span<const Term>(ny->terms()), std::nullopt};
  for (;;) {
    if (cx.empty() && cy.empty()) return strong_ordering::equal;
    if (cx.empty()) return strong_ordering::less;
    if (cy.empty()) return strong_ordering::greater;
    const Term tx = cx.current();
    const Term ty = cy.current();
    const Atom* ax = as_atom(tx);
    const Atom* ay = as_atom(ty);

    if (ax && ay) {
      strong_ordering c = compare_nodes(ax->exp, ay->exp, base);
      if (c != strong_ordering::equal) return c;
      if (ax->coeff != ay->coeff) return ax->coeff <=> ay->coeff;
      cx.advance();
      cy.advance();
      continue;
    }

    if (!ax && !ay) {
      const Run rx = *as_run(tx);
      const Run ry = *as_run(ty);
      strong_ordering c = compare_nodes(rx.hi_excl, ry.hi_excl, base);
      if (c != strong_ordering::equal) return c;
      if (rx.coeff != ry.coeff) return rx.coeff <=> ry.coeff;
      strong_ordering l = compare_nodes(rx.lo, ry.lo, base);
      if (l == strong_ordering::equal) {
        cx.advance();
        cy.advance();
      } else if (l == strong_ordering::less) {
        // x's block keeps going below the shared part
        cy.advance();
        cx.replace_current(Run{rx.coeff, rx.lo, ry.lo});
      } else {
        cx.advance();
        cy.replace_current(Run{ry.coeff, ry.lo, rx.lo});
      }
      continue;
    }

    if (ax) {
      const Run ry = *as_run(ty);
      strong_ordering c =
          compare_nodes(successor_for(ax->exp, base), ry.hi_excl, base);
      if (c == strong_ordering::less) return strong_ordering::less;
      if (c == strong_ordering::greater) return strong_ordering::greater;
      if (ax->coeff != ry.coeff) return ax->coeff <=> ry.coeff;
      // equal tops and coefficients: the block sheds its top element
      strong_ordering l = compare_nodes(ry.lo, ax->exp, base);
      if (l == strong_ordering::greater) {
        throw std::logic_error("malformed block in comparison");
      }
      const Atom atom = *ax;
      cx.advance();
      if (l == strong_ordering::less) {
        cy.replace_current(Run{ry.coeff, ry.lo, atom.exp});
      } else {
        cy.advance();
      }
      continue;
    }

    const Run rx = *as_run(tx);
    strong_ordering c =
        compare_nodes(rx.hi_excl, successor_for(ay->exp, base), base);
    if (c == strong_ordering::less) return strong_ordering::less;
    if (c == strong_ordering::greater) return strong_ordering::greater;
    if (rx.coeff != ay->coeff) return rx.coeff <=> ay->coeff;
    strong_ordering l = compare_nodes(rx.lo, ay->exp, base);
    if (l == strong_ordering::greater) {
      throw std::logic_error("malformed block in comparison");
    }
    const Atom atom = *ay;
    cy.advance();
    if (l == strong_ordering::less) {
      cx.replace_current(Run{rx.coeff, rx.lo, atom.exp});
    } else {
      cx.advance();
    }
  }
}

bool node_equal(const NodePtr& a, const NodePtr& b) {
  if (a.get() == b.get()) return true;
  const auto& ta = a->terms();
  const auto& tb = b->terms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    const Atom* aa = as_atom(ta[i]);
    const Atom* ab = as_atom(tb[i]);
    if ((aa == nullptr) != (ab == nullptr)) return false;
    if (aa) {
      if (aa->coeff != ab->coeff || !node_equal(aa->exp, ab->exp)) return false;
    } else {
      const Run* ra = as_run(ta[i]);
      const Run* rb = as_run(tb[i]);
      if (ra->coeff != rb->coeff || !node_equal(ra->lo, rb->lo) ||
          !node_equal(ra->hi_excl, rb->hi_excl)) {
        return false;
      }
    }
  }
  return true;
}

void validate_node(const NodePtr& n, std::uint64_t coeff_bound,
                   std::uint64_t cmp_base, bool relaxed_tail) {
  const auto& terms = n->terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::uint64_t coeff;
    bool at_relaxed_slot = false;
    if (const Atom* a = as_atom(terms[i])) {
      coeff = a->coeff;
      at_relaxed_slot =
          relaxed_tail && i + 1 == terms.size() && a->exp->is_zero();
      validate_node(a->exp, coeff_bound, cmp_base, false);
    } else {
      const Run* r = as_run(terms[i]);
      coeff = r->coeff;
      validate_node(r->lo, coeff_bound, cmp_base, true);
      validate_node(r->hi_excl, coeff_bound, cmp_base, true);
      if (compare_nodes(r->lo, r->hi_excl, cmp_base) !=
          std::strong_ordering::less) {
        throw validation_error("empty exponent block");
      }
    }
    if (coeff == 0) throw validation_error("zero coefficient");
    if (coeff_bound != 0 && coeff >= coeff_bound + (at_relaxed_slot ? 1 : 0)) {
      throw validation_error("coefficient not below the base");
    }
    if (i + 1 < terms.size()) {
      // this term's smallest exponent must clear the next term entirely
      const NodePtr& lo_i = as_atom(terms[i]) ? as_atom(terms[i])->exp
                                              : as_run(terms[i])->lo;
      if (const Atom* next_atom = as_atom(terms[i + 1])) {
        if (compare_nodes(lo_i, next_atom->exp, cmp_base) !=
            std::strong_ordering::greater) {
          throw validation_error("terms out of order");
        }
      } else if (compare_nodes(lo_i, as_run(terms[i + 1])->hi_excl,
                               cmp_base) == std::strong_ordering::less) {
        throw validation_error("terms out of order");
      }
    }
  }
}

}  // namespace detail

Base::Base(std::uint64_t value) : value_(value) {
  if (value < 2) throw std::invalid_argument("base must be >= 2");
}

const NodePtr& zero_node() {
  static const NodePtr zero = std::make_shared<const FormNode>();
  return zero;
}

NodePtr make_node(std::vector<Term> terms) {
  if (terms.empty()) return zero_node();
  return std::make_shared<const FormNode>(std::move(terms));
}

bool structurally_equal(const NodePtr& a, const NodePtr& b) {
  return detail::node_equal(a, b);
}

HForm::HForm(Base base, NodePtr node) : base_(base), node_(std::move(node)) {
  if (!node_) throw std::invalid_argument("null node");
}

bool structurally_equal(const HForm& a, const HForm& b) {
  return a.base() == b.base() && detail::node_equal(a.node(), b.node());
}

HForm make_form(Base base, std::vector<Term> terms) {
  HForm f(base, make_node(std::move(terms)));
  validate_canonical(f);
  return f;
}

void validate_canonical(const HForm& f) {
  detail::validate_node(f.node(), f.base().value(), f.base().value(), false);
}

HForm from_natural(const BigNat& m, Base base) {
  if (m < 0) throw std::invalid_argument("negative value");
  return HForm(base, detail::node_from_natural(m, base.value()));
}

HForm successor(const HForm& f) {
  return HForm(f.base(), detail::node_successor(f.node(), f.base().value()));
}

HForm decrement(const HForm& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot decrement zero");
  return HForm(f.base(), detail::node_decrement(f.node(), f.base().value()));
}

HForm bump(const HForm& f, Base new_base) {
  if (new_base.value() <= f.base().value()) {
    throw std::invalid_argument("base replacement must increase the base");
  }
  return HForm(new_base, f.node());
}

std::strong_ordering compare_value(const HForm& f, const HForm& g) {
  if (!(f.base() == g.base())) {
    throw std::invalid_argument("comparing forms over different bases");
  }
  return detail::compare_nodes(f.node(), g.node(), f.base().value());
}

}  // namespace goodstein
