#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "goodstein/evaluate.hpp"
#include "goodstein/form.hpp"

namespace goodstein {

enum class TailPolicy { repeat_last, error_on_exhaustion };

struct ConstantSchedule {
  std::uint64_t d;
};

struct ExplicitSchedule {
  std::vector<std::uint64_t> ds;
  TailPolicy tail = TailPolicy::error_on_exhaustion;
};

// Reproducible pseudo-random increments: mt19937_64 seeded with `seed`,
// each draw mapped to [d_min, d_max] as d_min + x % (d_max - d_min + 1).
struct SeededSchedule {
  std::uint64_t seed;
  std::uint64_t d_min;
  std::uint64_t d_max;
};

// Source of the per-step base increments d_1, d_2, ... (each >= 1).
using Schedule = std::variant<ConstantSchedule, ExplicitSchedule, SeededSchedule>;

void validate_schedule(const Schedule& schedule);

class ScheduleStream {
 public:
  explicit ScheduleStream(const Schedule& schedule);
  ~ScheduleStream();
  ScheduleStream(ScheduleStream&&) noexcept;
  ScheduleStream& operator=(ScheduleStream&&) noexcept;

  // nullopt once an error_on_exhaustion list runs dry.
  std::optional<std::uint64_t> next();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct SequenceState {
  std::uint64_t step_index;
  HForm form;  // form.base() is the current base
  bool terminated;
};

SequenceState initial_state(const BigNat& m, Base base0);
SequenceState initial_state(HForm start);

// One step: replace the base by base + d, then subtract one. Rejects
// terminated states and d < 1.
SequenceState step(const SequenceState& s, std::uint64_t d);

struct TraceRecord {
  std::uint64_t n;
  std::uint64_t base_before;
  std::uint64_t d;  // 0 on the initial record
  std::uint64_t base_after;
  std::string form;
  std::string shape;
  double digits10;
  std::optional<std::string> value;  // decimal, present when within the cap
  bool ordinal_decreased;            // always true; a false value is a bug
};

enum class OutcomeKind { terminated_at, step_budget_exhausted, schedule_exhausted };

struct RunOutcome {
  OutcomeKind kind;
  std::uint64_t step;  // termination step, or steps taken
};

using TraceSink = std::function<void(const TraceRecord&)>;

// Thrown by run() when a step fails the termination measure check; the
// engine treats that as a hard internal error, never as data.
class ordinal_error : public std::logic_error {
 public:
  ordinal_error(std::uint64_t step, const std::string& detail);
  std::uint64_t step() const { return step_; }

 private:
  std::uint64_t step_;
};

// Runs the sequence from `start`, emitting one record per step including
// step zero, until the value hits zero, the step budget runs out, or a
// strict schedule is exhausted. Every step is checked for strict measure
// decrease.
RunOutcome run(const HForm& start, const Schedule& schedule,
               std::uint64_t max_steps, std::uint64_t digit_cap,
               const TraceSink& sink);
RunOutcome run(const BigNat& m, Base base0, const Schedule& schedule,
               std::uint64_t max_steps, std::uint64_t digit_cap,
               const TraceSink& sink);

enum class MonotoneKind {
  holds_strictly,
  holds_with_equal_zeros,
  violated,
  inconclusive  // defensive; the comparison is total, so never produced
};

struct MonotoneVerdict {
  MonotoneKind kind;
  std::uint64_t step;  // first offending step for violated
};

// Runs x and y (x > y >= 1) in lockstep under one schedule and compares the
// forms at every step: reports the first step where x's value falls below
// y's, or whether the prefix stayed strictly ordered (equality tolerated
// only once both sides sit at zero).
MonotoneVerdict monotone_compare(const BigNat& x, const BigNat& y, Base base0,
                                 const Schedule& schedule, std::uint64_t steps,
                                 std::uint64_t digit_cap = kDefaultDigitCap);

}  // namespace goodstein
