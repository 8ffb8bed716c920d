#include "goodstein/trace_io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace goodstein {
namespace {

std::uint64_t parse_u64_field(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument(std::string("bad ") + what + ": \"" +
                                std::string(text) + "\"");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

const char* outcome_name(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::terminated_at:
      return "terminated_at";
    case OutcomeKind::step_budget_exhausted:
      return "step_budget_exhausted";
    case OutcomeKind::schedule_exhausted:
      return "schedule_exhausted";
  }
  throw std::logic_error("unknown outcome");
}

OutcomeKind outcome_from_name(const std::string& name) {
  if (name == "terminated_at") return OutcomeKind::terminated_at;
  if (name == "step_budget_exhausted") return OutcomeKind::step_budget_exhausted;
  if (name == "schedule_exhausted") return OutcomeKind::schedule_exhausted;
  throw std::invalid_argument("bad outcome kind: " + name);
}

nlohmann::json digits_to_json(double digits10) {
  if (std::isinf(digits10)) return "astronomical";
  return digits10;
}

double digits_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "astronomical") {
      return std::numeric_limits<double>::infinity();
    }
    throw std::invalid_argument("bad digits10 marker");
  }
  return j.get<double>();
}

}  // namespace

nlohmann::json schedule_to_json(const Schedule& schedule) {
  if (const auto* c = std::get_if<ConstantSchedule>(&schedule)) {
    return {{"kind", "const"}, {"d", c->d}};
  }
  if (const auto* e = std::get_if<ExplicitSchedule>(&schedule)) {
    return {{"kind", "list"},
            {"ds", e->ds},
            {"tail",
             e->tail == TailPolicy::repeat_last ? "repeat" : "strict"}};
  }
  const auto& s = std::get<SeededSchedule>(schedule);
  return {{"kind", "rand"},
          {"seed", s.seed},
          {"d_min", s.d_min},
          {"d_max", s.d_max}};
}

Schedule schedule_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "const") {
    return ConstantSchedule{j.at("d").get<std::uint64_t>()};
  }
  if (kind == "list") {
    ExplicitSchedule e;
    e.ds = j.at("ds").get<std::vector<std::uint64_t>>();
    const std::string tail = j.at("tail").get<std::string>();
    if (tail == "repeat") {
      e.tail = TailPolicy::repeat_last;
    } else if (tail == "strict") {
      e.tail = TailPolicy::error_on_exhaustion;
    } else {
      throw std::invalid_argument("bad tail policy: " + tail);
    }
    return e;
  }
  if (kind == "rand") {
    return SeededSchedule{j.at("seed").get<std::uint64_t>(),
                          j.at("d_min").get<std::uint64_t>(),
                          j.at("d_max").get<std::uint64_t>()};
  }
  throw std::invalid_argument("bad schedule kind: " + kind);
}

Schedule parse_schedule_spec(std::string_view spec) {
  if (spec.rfind("const:", 0) == 0) {
    return ConstantSchedule{parse_u64_field(spec.substr(6), "increment")};
  }
  if (spec.rfind("list:", 0) == 0) {
    std::vector<std::string_view> parts = split(spec.substr(5), ',');
    ExplicitSchedule e;
    e.tail = TailPolicy::error_on_exhaustion;
    if (!parts.empty() && parts.back() == "repeat") {
      e.tail = TailPolicy::repeat_last;
      parts.pop_back();
    } else if (!parts.empty() && parts.back() == "strict") {
      parts.pop_back();
    }
    if (parts.empty()) throw std::invalid_argument("empty increment list");
    for (std::string_view p : parts) {
      e.ds.push_back(parse_u64_field(p, "increment"));
    }
    return e;
  }
  if (spec.rfind("rand:", 0) == 0) {
    std::vector<std::string_view> parts = split(spec.substr(5), ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("expected rand:<seed>:<d_min>:<d_max>");
    }
    return SeededSchedule{parse_u64_field(parts[0], "seed"),
                          parse_u64_field(parts[1], "d_min"),
                          parse_u64_field(parts[2], "d_max")};
  }
  throw std::invalid_argument(
      "schedule must be const:<d>, list:<d1>,...[,repeat|,strict], or "
      "rand:<seed>:<d_min>:<d_max>");
}

std::string schedule_spec(const Schedule& schedule) {
  std::ostringstream out;
  if (const auto* c = std::get_if<ConstantSchedule>(&schedule)) {
    out << "const:" << c->d;
  } else if (const auto* e = std::get_if<ExplicitSchedule>(&schedule)) {
    out << "list:";
    for (std::size_t i = 0; i < e->ds.size(); ++i) {
      if (i) out << ',';
      out << e->ds[i];
    }
    if (e->tail == TailPolicy::repeat_last) out << ",repeat";
  } else {
    const auto& s = std::get<SeededSchedule>(schedule);
    out << "rand:" << s.seed << ':' << s.d_min << ':' << s.d_max;
  }
  return out.str();
}

nlohmann::json trace_to_json(const TraceDocument& doc) {
  nlohmann::json records = nlohmann::json::array();
  for (const TraceRecord& r : doc.records) {
    nlohmann::json jr = {
        {"n", r.n},
        {"base_before", r.base_before},
        {"d", r.d},
        {"base_after", r.base_after},
        {"form", r.form},
        {"shape", r.shape},
        {"digits10", digits_to_json(r.digits10)},
        {"ordinal_decreased", r.ordinal_decreased},
    };
    if (r.value) jr["value"] = *r.value;
    records.push_back(std::move(jr));
  }
  nlohmann::json outcome = {{"kind", outcome_name(doc.outcome.kind)}};
  if (doc.outcome.kind == OutcomeKind::terminated_at) {
    outcome["step"] = doc.outcome.step;
  }
  return {{"m", doc.m ? nlohmann::json(*doc.m) : nlohmann::json(nullptr)},
          {"base0", doc.base0},
          {"schedule", schedule_to_json(doc.schedule)},
          {"digit_cap", doc.digit_cap},
          {"records", std::move(records)},
          {"outcome", std::move(outcome)}};
}

TraceDocument trace_from_json(const nlohmann::json& j) {
  TraceDocument doc;
  if (!j.at("m").is_null()) doc.m = j.at("m").get<std::string>();
  doc.base0 = j.at("base0").get<std::uint64_t>();
  doc.schedule = schedule_from_json(j.at("schedule"));
  doc.digit_cap = j.at("digit_cap").get<std::uint64_t>();
  for (const nlohmann::json& jr : j.at("records")) {
    TraceRecord r;
    r.n = jr.at("n").get<std::uint64_t>();
    r.base_before = jr.at("base_before").get<std::uint64_t>();
    r.d = jr.at("d").get<std::uint64_t>();
    r.base_after = jr.at("base_after").get<std::uint64_t>();
    r.form = jr.at("form").get<std::string>();
    r.shape = jr.at("shape").get<std::string>();
    r.digits10 = digits_from_json(jr.at("digits10"));
    if (jr.contains("value")) r.value = jr.at("value").get<std::string>();
    r.ordinal_decreased = jr.at("ordinal_decreased").get<bool>();
    doc.records.push_back(std::move(r));
  }
  const nlohmann::json& jo = j.at("outcome");
  doc.outcome.kind = outcome_from_name(jo.at("kind").get<std::string>());
  doc.outcome.step = doc.outcome.kind == OutcomeKind::terminated_at
                         ? jo.at("step").get<std::uint64_t>()
                         : doc.records.empty() ? 0 : doc.records.back().n;
  return doc;
}

std::string trace_to_csv(const TraceDocument& doc) {
  std::ostringstream out;
  out << "n,base_before,d,base_after,form,shape,digits10,value,"
         "ordinal_decreased\n";
  for (const TraceRecord& r : doc.records) {
    out << r.n << ',' << r.base_before << ',' << r.d << ',' << r.base_after
        << ',' << '"' << r.form << '"' << ',' << '"' << r.shape << '"' << ',';
    if (std::isinf(r.digits10)) {
      out << "astronomical";
    } else {
      out << nlohmann::json(r.digits10).dump();
    }
    out << ',';
    if (r.value) out << *r.value;
    out << ',' << (r.ordinal_decreased ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace goodstein
