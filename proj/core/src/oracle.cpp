#include "goodstein/oracle.hpp"

#include <stdexcept>
#include <variant>

namespace goodstein::oracle {
namespace {

// Expansion threshold: exponents above this would materialize numbers far
// beyond anything the generated test corpus produces.
constexpr std::uint64_t kMaxExpandedExponent = 1'000'000;

std::uint64_t small_exponent(const BigNat& e) {
  if (e > kMaxExpandedExponent) {
    throw std::invalid_argument("exponent too large to expand");
  }
  return e.convert_to<std::uint64_t>();
}

BigNat pow_by_mult(std::uint64_t base, std::uint64_t e) {
  BigNat r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

BigNat eval_node(const NodePtr& n, std::uint64_t base) {
  BigNat total = 0;
  for (const Term& t : n->terms()) {
    if (const Atom* a = std::get_if<Atom>(&t)) {
      std::uint64_t e = small_exponent(eval_node(a->exp, base));
      total += BigNat(a->coeff) * pow_by_mult(base, e);
    } else {
      const Run& r = std::get<Run>(t);
      std::uint64_t lo = small_exponent(eval_node(r.lo, base));
      std::uint64_t hi = small_exponent(eval_node(r.hi_excl, base));
      BigNat power = pow_by_mult(base, lo);
      for (std::uint64_t e = lo; e < hi; ++e) {
        total += BigNat(r.coeff) * power;
        power *= base;
      }
    }
  }
  return total;
}

}  // namespace

BigNat eval_expanded(const HForm& f) {
  return eval_node(f.node(), f.base().value());
}

BigNat rebase_value(const BigNat& v, std::uint64_t from, std::uint64_t to) {
  if (from < 2 || to < 2) throw std::invalid_argument("bases must be >= 2");
  BigNat rest = v;
  BigNat result = 0;
  std::uint64_t position = 0;
  while (rest != 0) {
    BigNat digit = rest % from;
    rest /= from;
    if (digit != 0) {
      BigNat e = rebase_value(BigNat(position), from, to);
      BigNat power = pow_by_mult(to, small_exponent(e));
      result += digit * power;
    }
    ++position;
  }
  return result;
}

std::vector<BigNat> sequence_values(const BigNat& m, std::uint64_t base0,
                                    const std::vector<std::uint64_t>& increments) {
  std::vector<BigNat> values;
  values.push_back(m);
  BigNat v = m;
  std::uint64_t base = base0;
  for (std::uint64_t d : increments) {
    if (v == 0) break;
    std::uint64_t next_base = base + d;
    v = rebase_value(v, base, next_base) - 1;
    base = next_base;
    values.push_back(v);
  }
  return values;
}

std::optional<std::uint64_t> steps_to_zero(const BigNat& m, std::uint64_t base0,
                                           const std::vector<std::uint64_t>& increments) {
  std::vector<BigNat> values = sequence_values(m, base0, increments);
  if (values.back() != 0) return std::nullopt;
  return values.size() - 1;
}

std::uint64_t tower_bound_small(std::uint64_t a, std::uint64_t b) {
  if (a < 2) throw std::invalid_argument("tower base must be >= 2");
  std::uint64_t n = 1;
  BigNat t = a;
  while (t < b) {
    // materialized only while below b, so the exponent stays moderate
    BigNat next = 1;
    std::uint64_t e = t.convert_to<std::uint64_t>();
    for (std::uint64_t i = 0; i < e && next < b; ++i) next *= a;
    t = next;
    ++n;
  }
  return n;
}

}  // namespace goodstein::oracle
