#include "goodstein/evaluate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>

#include "node_ops.hpp"

namespace goodstein {
namespace {

// Exponents whose own value needs more decimal digits than this are treated
// as astronomical outright: the power they denote cannot be estimated in a
// double, let alone materialized.
constexpr int kExpDigitLimit = 18;

constexpr double kInf = std::numeric_limits<double>::infinity();

BigNat pow_u64(std::uint64_t base, std::uint64_t e) {
  BigNat acc = 1;
  BigNat sq(base);
  while (e != 0) {
    if (e & 1) acc *= sq;
    e >>= 1;
    if (e != 0) sq *= sq;
  }
  return acc;
}

// Digit estimate for a whole node (an upper bound on log10(value) + 1).
double node_estimate(const NodePtr& n, std::uint64_t base);

// Exact value of an exponent node, or nullopt when it is too large to hold.
// Exponent magnitudes are gated by kExpDigitLimit, so the recursion never
// builds a number wider than a u64.
std::optional<std::uint64_t> exponent_value(const NodePtr& n,
                                            std::uint64_t base) {
  if (node_estimate(n, base) > kExpDigitLimit) return std::nullopt;
  BigNat v = 0;
  for (const Term& t : n->terms()) {
    if (const Atom* a = std::get_if<Atom>(&t)) {
      auto e = exponent_value(a->exp, base);
      if (!e) return std::nullopt;
      v += BigNat(a->coeff) * pow_u64(base, *e);
    } else {
      const Run& r = std::get<Run>(t);
      auto lo = exponent_value(r.lo, base);
      auto hi = exponent_value(r.hi_excl, base);
      if (!lo || !hi) return std::nullopt;
      v += BigNat(r.coeff) *
           ((pow_u64(base, *hi) - pow_u64(base, *lo)) / (base - 1));
    }
    if (v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return v.convert_to<std::uint64_t>();
}

double node_estimate(const NodePtr& n, std::uint64_t base) {
  const auto& terms = n->terms();
  if (terms.empty()) return 0.0;
  const double lb = std::log10(double(base));
  const Term& top = terms.front();
  if (const Atom* a = std::get_if<Atom>(&top)) {
    auto e = exponent_value(a->exp, base);
    if (!e) return kInf;
    // everything below the top term adds less than one more copy of it
    double c = double(a->coeff) + (terms.size() > 1 ? 1.0 : 0.0);
    return std::log10(c) + double(*e) * lb + 1.0;
  }
  const Run& r = std::get<Run>(top);
  auto hi = exponent_value(r.hi_excl, base);
  if (!hi) return kInf;
  // coeff * sum over [lo, hi) stays below base^hi
  return double(*hi) * lb + 1.0;
}

// nullopt when some exponent is too wide even for the 18-digit gate; the
// caller treats that the same as blowing the digit cap.
std::optional<BigNat> node_eval(const NodePtr& n, std::uint64_t base) {
  BigNat v = 0;
  for (const Term& t : n->terms()) {
    if (const Atom* a = std::get_if<Atom>(&t)) {
      auto e = exponent_value(a->exp, base);
      if (!e) return std::nullopt;
      v += BigNat(a->coeff) * pow_u64(base, *e);
    } else {
      const Run& r = std::get<Run>(t);
      auto lo = exponent_value(r.lo, base);
      auto hi = exponent_value(r.hi_excl, base);
      if (!lo || !hi) return std::nullopt;
      v += BigNat(r.coeff) *
           ((pow_u64(base, *hi) - pow_u64(base, *lo)) / (base - 1));
    }
  }
  return v;
}

}  // namespace

double estimate_digits(const HForm& f) {
  return node_estimate(f.node(), f.base().value());
}

std::optional<BigNat> evaluate(const HForm& f, std::uint64_t digit_cap) {
  double est = estimate_digits(f);
  if (is_astronomical(est) || est > double(digit_cap)) return std::nullopt;
  return node_eval(f.node(), f.base().value());
}

}  // namespace goodstein
