#include "goodstein/sequence.hpp"

#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

#include "goodstein/grammar.hpp"
#include "goodstein/shape.hpp"

namespace goodstein {

void validate_schedule(const Schedule& schedule) {
  if (const auto* c = std::get_if<ConstantSchedule>(&schedule)) {
    if (c->d < 1) throw std::invalid_argument("increment must be at least 1");
    return;
  }
  if (const auto* e = std::get_if<ExplicitSchedule>(&schedule)) {
    if (e->ds.empty()) throw std::invalid_argument("empty increment list");
    for (std::uint64_t d : e->ds) {
      if (d < 1) throw std::invalid_argument("increment must be at least 1");
    }
    return;
  }
  const auto& s = std::get<SeededSchedule>(schedule);
  if (s.d_min < 1) throw std::invalid_argument("increment must be at least 1");
  if (s.d_min > s.d_max) {
    throw std::invalid_argument("increment range is empty");
  }
}

struct ScheduleStream::Impl {
  Schedule schedule;
  std::size_t index = 0;
  std::mt19937_64 rng;
};

ScheduleStream::ScheduleStream(const Schedule& schedule)
    : impl_(std::make_unique<Impl>()) {
  validate_schedule(schedule);
  impl_->schedule = schedule;
  if (const auto* s = std::get_if<SeededSchedule>(&schedule)) {
    impl_->rng.seed(s->seed);
  }
}

ScheduleStream::~ScheduleStream() = default;
ScheduleStream::ScheduleStream(ScheduleStream&&) noexcept = default;
ScheduleStream& ScheduleStream::operator=(ScheduleStream&&) noexcept = default;

std::optional<std::uint64_t> ScheduleStream::next() {
  if (const auto* c = std::get_if<ConstantSchedule>(&impl_->schedule)) {
    return c->d;
  }
  if (const auto* e = std::get_if<ExplicitSchedule>(&impl_->schedule)) {
    if (impl_->index < e->ds.size()) return e->ds[impl_->index++];
    if (e->tail == TailPolicy::repeat_last) return e->ds.back();
    return std::nullopt;
  }
  const auto& s = std::get<SeededSchedule>(impl_->schedule);
  std::uint64_t span = s.d_max - s.d_min + 1;  // d_min >= 1, so no wrap
  return s.d_min + impl_->rng() % span;
}

SequenceState initial_state(const BigNat& m, Base base0) {
  return initial_state(from_natural(m, base0));
}

SequenceState initial_state(HForm start) {
  validate_canonical(start);
  bool zero = start.is_zero();
  return SequenceState{0, std::move(start), zero};
}

SequenceState step(const SequenceState& s, std::uint64_t d) {
  if (s.terminated) throw std::invalid_argument("stepping a finished sequence");
  if (d < 1) throw std::invalid_argument("increment must be at least 1");
  std::uint64_t base = s.form.base().value();
  if (d > std::numeric_limits<std::uint64_t>::max() - base) {
    throw std::invalid_argument("base increment overflows");
  }
  HForm next = decrement(bump(s.form, Base(base + d)));
  bool zero = next.is_zero();
  return SequenceState{s.step_index + 1, std::move(next), zero};
}

ordinal_error::ordinal_error(std::uint64_t step, const std::string& detail)
    : std::logic_error("termination measure failed at step " +
                       std::to_string(step) + ": " + detail),
      step_(step) {}

namespace {

TraceRecord make_record(std::uint64_t n, std::uint64_t base_before,
                        std::uint64_t d, const HForm& f,
                        std::uint64_t digit_cap) {
  TraceRecord rec;
  rec.n = n;
  rec.base_before = base_before;
  rec.d = d;
  rec.base_after = f.base().value();
  rec.form = render(f);
  rec.shape = render(shape_of(f));
  rec.digits10 = estimate_digits(f);
  if (auto v = evaluate(f, digit_cap)) rec.value = to_decimal(*v);
  rec.ordinal_decreased = true;
  return rec;
}

}  // namespace

RunOutcome run(const HForm& start, const Schedule& schedule,
               std::uint64_t max_steps, std::uint64_t digit_cap,
               const TraceSink& sink) {
  ScheduleStream stream(schedule);
  SequenceState s = initial_state(start);
  if (sink) {
    sink(make_record(0, s.form.base().value(), 0, s.form, digit_cap));
  }
  if (s.terminated) return RunOutcome{OutcomeKind::terminated_at, 0};
  for (std::uint64_t i = 1; i <= max_steps; ++i) {
    std::optional<std::uint64_t> d = stream.next();
    if (!d) return RunOutcome{OutcomeKind::schedule_exhausted, i - 1};
    HForm before = s.form;
    s = step(s, *d);
    StepDecrease check = check_step_decrease(before, s.form, s.form.base());
    if (!check.ok) throw ordinal_error(s.step_index, check.detail);
    if (sink) {
      sink(make_record(s.step_index, before.base().value(), *d, s.form,
                       digit_cap));
    }
    if (s.terminated) {
      return RunOutcome{OutcomeKind::terminated_at, s.step_index};
    }
  }
  return RunOutcome{OutcomeKind::step_budget_exhausted, max_steps};
}

RunOutcome run(const BigNat& m, Base base0, const Schedule& schedule,
               std::uint64_t max_steps, std::uint64_t digit_cap,
               const TraceSink& sink) {
  return run(from_natural(m, base0), schedule, max_steps, digit_cap, sink);
}

MonotoneVerdict monotone_compare(const BigNat& x, const BigNat& y, Base base0,
                                 const Schedule& schedule, std::uint64_t steps,
                                 std::uint64_t digit_cap) {
  (void)digit_cap;  // the comparison is symbolic; no value is materialized
  if (!(x > y && y >= 1)) {
    throw std::invalid_argument("requires x > y >= 1");
  }
  ScheduleStream stream(schedule);
  HForm fx = from_natural(x, base0);
  HForm fy = from_natural(y, base0);
  bool equal_zeros = false;
  std::uint64_t last = 0;
  for (std::uint64_t i = 1; i <= steps; ++i) {
    std::optional<std::uint64_t> d = stream.next();
    if (!d) break;
    std::uint64_t base = fx.base().value();
    if (*d > std::numeric_limits<std::uint64_t>::max() - base) {
      throw std::invalid_argument("base increment overflows");
    }
    Base nb(base + *d);
    fx = fx.is_zero() ? HForm(nb, zero_node()) : decrement(bump(fx, nb));
    fy = fy.is_zero() ? HForm(nb, zero_node()) : decrement(bump(fy, nb));
    last = i;
    std::strong_ordering c = compare_value(fx, fy);
    if (c == std::strong_ordering::greater) continue;
    if (c == std::strong_ordering::equal && fx.is_zero()) {
      equal_zeros = true;
      break;  // both stay zero from here on
    }
    return MonotoneVerdict{MonotoneKind::violated, i};
  }
  return MonotoneVerdict{
      equal_zeros ? MonotoneKind::holds_with_equal_zeros
                  : MonotoneKind::holds_strictly,
      last};
}

}  // namespace goodstein
