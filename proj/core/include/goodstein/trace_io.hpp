#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goodstein/sequence.hpp"

namespace goodstein {

struct TraceDocument {
  // Decimal start value; absent when the start form is beyond the digit cap
  // (tower starts can be).
  std::optional<std::string> m;
  std::uint64_t base0 = 2;
  Schedule schedule = ConstantSchedule{1};
  std::uint64_t digit_cap = kDefaultDigitCap;
  std::vector<TraceRecord> records;
  RunOutcome outcome{OutcomeKind::terminated_at, 0};
};

nlohmann::json schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const nlohmann::json& j);

// const:<d> | list:<d1>,<d2>,...[,repeat|,strict] | rand:<seed>:<d_min>:<d_max>
// Lists default to strict (stop when exhausted). Throws std::invalid_argument.
Schedule parse_schedule_spec(std::string_view spec);
std::string schedule_spec(const Schedule& schedule);

nlohmann::json trace_to_json(const TraceDocument& doc);
TraceDocument trace_from_json(const nlohmann::json& j);

// Same fields as the JSON records, one row per record; form and shape are
// quoted, the value column is empty when the value was out of cap.
std::string trace_to_csv(const TraceDocument& doc);

}  // namespace goodstein
