#include "goodstein/random_forms.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "node_ops.hpp"

namespace goodstein {
namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

// base-b digits of v as (position, digit) pairs, most significant first
std::vector<std::pair<std::uint64_t, std::uint64_t>> digits_of(
    std::uint64_t v, std::uint64_t base) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::uint64_t pos = 0;
  while (v != 0) {
    std::uint64_t d = v % base;
    if (d != 0) out.emplace_back(pos, d);
    v /= base;
    ++pos;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// A canonical node of exact value v. Sometimes rewrites stretches of equal
// digits at consecutive positions as compressed blocks, so nested Run terms
// show up in exponents too.
NodePtr node_of(std::mt19937_64& rng, std::uint64_t v, std::uint64_t base,
                bool allow_blocks) {
  auto digits = digits_of(v, base);
  std::vector<Term> terms;
  std::size_t i = 0;
  while (i < digits.size()) {
    std::size_t j = i;
    while (j + 1 < digits.size() &&
           digits[j + 1].second == digits[i].second &&
           digits[j + 1].first + 1 == digits[j].first) {
      ++j;
    }
    bool as_block = allow_blocks && j > i && rng() % 2 == 0;
    if (as_block) {
      terms.push_back(Run{digits[i].second,
                          node_of(rng, digits[j].first, base, allow_blocks),
                          node_of(rng, digits[i].first + 1, base,
                                  allow_blocks)});
      i = j + 1;
    } else {
      terms.push_back(Atom{digits[i].second,
                           node_of(rng, digits[i].first, base, allow_blocks)});
      ++i;
    }
  }
  return make_node(std::move(terms));
}

}  // namespace

HForm random_form(std::mt19937_64& rng, const RandomFormOptions& options) {
  std::uint64_t base = pick(rng, options.base_min, options.base_max);
  double per_exp = std::log10(static_cast<double>(base));
  std::uint64_t budget = options.max_digits10 > 2 ? options.max_digits10 - 2 : 1;
  std::uint64_t e_max =
      static_cast<std::uint64_t>(static_cast<double>(budget) / per_exp);

  std::uint64_t count = pick(rng, 1, std::max<std::uint64_t>(1, options.max_terms));
  std::vector<Term> ascending;
  std::uint64_t pos = 0;
  for (std::uint64_t k = 0; k < count && pos <= e_max; ++k) {
    std::uint64_t coeff = pick(rng, 1, base - 1);
    bool as_block = options.allow_blocks && rng() % 2 == 0 && pos < e_max;
    if (as_block) {
      std::uint64_t max_width =
          std::min(options.max_block_width, e_max - pos + 1);
      std::uint64_t width = pick(rng, 1, std::max<std::uint64_t>(1, max_width));
      ascending.push_back(
          Run{coeff, node_of(rng, pos, base, options.allow_blocks),
              node_of(rng, pos + width, base, options.allow_blocks)});
      pos += width;
    } else {
      ascending.push_back(
          Atom{coeff, node_of(rng, pos, base, options.allow_blocks)});
      pos += 1;
    }
    pos += rng() % 3;  // gap 0 keeps the next region touching this one
  }

  std::vector<Term> terms(ascending.rbegin(), ascending.rend());
  return HForm(Base(base), make_node(std::move(terms)));
}

}  // namespace goodstein
