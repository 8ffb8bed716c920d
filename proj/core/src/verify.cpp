#include "goodstein/verify.hpp"

#include <compare>
#include <random>
#include <string>
#include <unordered_set>
#include <variant>

#include "goodstein/evaluate.hpp"
#include "goodstein/grammar.hpp"
#include "goodstein/oracle.hpp"
#include "goodstein/random_forms.hpp"
#include "goodstein/shape.hpp"
#include "goodstein/towers.hpp"

namespace goodstein {
namespace {

void record_failure(SuiteReport& report, const std::string& detail) {
  ++report.failures;
  if (report.first_failure.empty()) report.first_failure = detail;
}

std::strong_ordering order_of(const BigNat& a, const BigNat& b) {
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const char* order_name(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "Less";
  if (o == std::strong_ordering::greater) return "Greater";
  return "Equal";
}

bool block_free(const NodePtr& n) {
  for (const Term& t : n->terms()) {
    if (const Atom* a = std::get_if<Atom>(&t)) {
      if (!block_free(a->exp)) return false;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace

SuiteReport verify_identity_suite(std::uint64_t a_max, std::uint64_t b_max) {
  SuiteReport report{"identity", 0, 0, ""};
  for (std::uint64_t a = 2; a <= a_max; ++a) {
    for (std::uint64_t b = 1; b <= b_max; ++b) {
      ++report.cases;
      if (!geometric_decrement_identity(a, b)) {
        record_failure(report, "a=" + std::to_string(a) +
                                   " b=" + std::to_string(b));
      }
    }
  }
  return report;
}

SuiteReport verify_monotone_classic(std::uint64_t x_max, std::uint64_t steps) {
  SuiteReport report{"monotone-classic", 0, 0, ""};
  const Schedule classic = ConstantSchedule{1};
  for (std::uint64_t x = 2; x <= x_max; ++x) {
    for (std::uint64_t y = 1; y < x; ++y) {
      ++report.cases;
      MonotoneVerdict v =
          monotone_compare(BigNat(x), BigNat(y), Base(2), classic, steps);
      if (v.kind == MonotoneKind::violated ||
          v.kind == MonotoneKind::inconclusive) {
        record_failure(report, "x=" + std::to_string(x) +
                                   " y=" + std::to_string(y) + " step " +
                                   std::to_string(v.step));
      }
    }
  }
  return report;
}

SuiteReport verify_monotone_schedules(std::uint64_t x_max, std::uint64_t steps,
                                      std::uint64_t schedules,
                                      std::uint64_t d_max, std::uint64_t seed,
                                      Base base0) {
  SuiteReport report{"monotone-schedules", 0, 0, ""};
  for (std::uint64_t s = 0; s < schedules; ++s) {
    const Schedule schedule = SeededSchedule{seed + s, 1, d_max};
    for (std::uint64_t x = 2; x <= x_max; ++x) {
      for (std::uint64_t y = 1; y < x; ++y) {
        ++report.cases;
        MonotoneVerdict v =
            monotone_compare(BigNat(x), BigNat(y), base0, schedule, steps);
        if (v.kind == MonotoneKind::violated ||
            v.kind == MonotoneKind::inconclusive) {
          record_failure(report, "seed=" + std::to_string(seed + s) +
                                     " x=" + std::to_string(x) +
                                     " y=" + std::to_string(y) + " step " +
                                     std::to_string(v.step));
        }
      }
    }
  }
  return report;
}

SuiteReport verify_ordinal_trace(const HForm& start, const Schedule& schedule,
                                 std::uint64_t steps) {
  SuiteReport report{"ordinal-trace", 0, 0, ""};
  ScheduleStream stream(schedule);
  SequenceState s = initial_state(start);
  std::unordered_set<std::string> seen;
  seen.insert(render(shape_of(s.form)));
  for (std::uint64_t i = 1; i <= steps && !s.terminated; ++i) {
    std::optional<std::uint64_t> d = stream.next();
    if (!d) break;
    HForm before = s.form;
    s = step(s, *d);
    ++report.cases;
    StepDecrease check = check_step_decrease(before, s.form, s.form.base());
    if (!check.ok) {
      record_failure(report,
                     "step " + std::to_string(i) + ": " + check.detail);
      break;
    }
    std::string shape = render(shape_of(s.form));
    if (!seen.insert(shape).second) {
      record_failure(report, "step " + std::to_string(i) +
                                 ": shape repeated: " + shape);
      break;
    }
  }
  return report;
}

SuiteReport verify_compare_oracle(std::uint64_t cases, std::uint64_t seed) {
  SuiteReport report{"compare-oracle", 0, 0, ""};
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < cases; ++i) {
    ++report.cases;
    RandomFormOptions options;
    std::uint64_t base =
        options.base_min + rng() % (options.base_max - options.base_min + 1);
    options.base_min = options.base_max = base;
    HForm f = random_form(rng, options);
    HForm g = rng() % 10 == 0 ? f : random_form(rng, options);
    std::strong_ordering expected =
        order_of(oracle::eval_expanded(f), oracle::eval_expanded(g));
    std::strong_ordering got = compare_value(f, g);
    if (got != expected) {
      record_failure(report, "value order " + std::string(order_name(got)) +
                                 " expected " + order_name(expected) + ": " +
                                 render(f) + " vs " + render(g));
      continue;
    }
    if (block_free(f.node()) && block_free(g.node())) {
      std::strong_ordering shape_got =
          compare_shape(shape_of(f), shape_of(g));
      if (shape_got != expected) {
        record_failure(report,
                       "shape order " + std::string(order_name(shape_got)) +
                           " expected " + order_name(expected) + ": " +
                           render(f) + " vs " + render(g));
      }
    }
  }
  return report;
}

SuiteReport verify_decrement_oracle(std::uint64_t cases, std::uint64_t seed) {
  SuiteReport report{"decrement-oracle", 0, 0, ""};
  std::mt19937_64 rng(seed);
  const std::uint64_t cap = 400;  // generated values stay under 10^301
  for (std::uint64_t i = 0; i < cases; ++i) {
    ++report.cases;
    RandomFormOptions options;
    HForm f = random_form(rng, options);
    BigNat v = oracle::eval_expanded(f);
    std::optional<BigNat> direct = evaluate(f, cap);
    if (!direct || *direct != v) {
      record_failure(report, "evaluator disagrees with expansion: " + render(f));
      continue;
    }
    HForm g = decrement(f);
    try {
      validate_canonical(g);
    } catch (const validation_error& e) {
      record_failure(report, "decrement broke canonicity (" +
                                 std::string(e.what()) + "): " + render(f));
      continue;
    }
    if (oracle::eval_expanded(g) != v - 1) {
      record_failure(report, "expanded decrement value off by more than one: " +
                                 render(f));
      continue;
    }
    std::optional<BigNat> direct_g = evaluate(g, cap);
    if (!direct_g || *direct_g != v - 1) {
      record_failure(report, "evaluated decrement value wrong: " + render(f));
      continue;
    }
    if (compare_value(g, f) != std::strong_ordering::less) {
      record_failure(report, "decrement did not compare below the input: " +
                                 render(f));
    }
  }
  return report;
}

}  // namespace goodstein
