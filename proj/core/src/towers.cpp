#include "goodstein/towers.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

#include "node_ops.hpp"

namespace goodstein {
namespace {

BigNat pow_nat(const BigNat& base, std::uint64_t e) {
  BigNat acc = 1;
  BigNat sq = base;
  while (e != 0) {
    if (e & 1) acc *= sq;
    e >>= 1;
    if (e != 0) sq *= sq;
  }
  return acc;
}

// Least e with a^e >= b, for a >= 2 and b >= 1. Starts just below
// log_a(b) (float estimate with two exponents of slack) and climbs.
std::uint64_t ceil_log(std::uint64_t a, const BigNat& b) {
  if (b <= 1) return 0;
  std::uint64_t bits_b = boost::multiprecision::msb(b);  // floor(log2 b)
  double per_exp = std::log2(static_cast<double>(a));
  double guess = static_cast<double>(bits_b) / per_exp;
  std::uint64_t e = guess > 2.0 ? static_cast<std::uint64_t>(guess) - 2 : 0;
  BigNat pow = pow_nat(BigNat(a), e);
  while (pow < b) {
    pow *= a;
    ++e;
  }
  return e;
}

}  // namespace

HForm tower_form(Base a, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("a tower has at least one level");
  NodePtr n = detail::one_node();  // exponent of the innermost level: a^1
  for (std::uint64_t i = 0; i < k; ++i) {
    n = make_node({Atom{1, n}});
  }
  return HForm(a, n);
}

std::optional<BigNat> superexp_value(Base a, std::uint64_t k,
                                     std::uint64_t digit_cap) {
  return evaluate(tower_form(a, k), digit_cap);
}

std::uint64_t tower_bound(Base a, const BigNat& b) {
  std::uint64_t n = 1;
  BigNat cur = b;
  while (cur > a.value()) {
    cur = ceil_log(a.value(), cur);
    ++n;
  }
  return n;
}

bool geometric_decrement_identity(std::uint64_t a, std::uint64_t b) {
  BigNat lhs = pow_nat(BigNat(a), b) - 1;
  BigNat sum = 0;
  BigNat power = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    sum += power;
    power *= a;
  }
  BigNat rhs = (BigNat(a) - 1) * sum;
  return lhs == rhs;
}

}  // namespace goodstein
