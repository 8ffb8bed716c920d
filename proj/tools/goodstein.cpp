// Command line front end: sequence tracing, verification suites, tower
// bounds, and form evaluation. Exit codes: 0 success, 1 verification or
// measure failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "goodstein/errors.hpp"
#include "goodstein/evaluate.hpp"
#include "goodstein/grammar.hpp"
#include "goodstein/oracle.hpp"
#include "goodstein/sequence.hpp"
#include "goodstein/shape.hpp"
#include "goodstein/towers.hpp"
#include "goodstein/trace_io.hpp"
#include "goodstein/verify.hpp"

namespace {

using namespace goodstein;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

[[noreturn]] void usage_error(const std::string& message) {
  throw CLI::ValidationError(message);
}

std::string digits_text(double digits10) {
  if (is_astronomical(digits10)) return "astronomical";
  return nlohmann::json(digits10).dump();
}

struct TowerArg {
  Base base;
  std::uint64_t levels;
};

TowerArg parse_tower(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    usage_error("--tower expects a,k");
  }
  auto a = parse_decimal(text.substr(0, comma));
  auto k = parse_decimal(text.substr(comma + 1));
  if (!a || !k || *a < 2 || *k < 1 || *k > 1'000'000) {
    usage_error("--tower expects a >= 2 and 1 <= k <= 10^6");
  }
  return TowerArg{Base(a->convert_to<std::uint64_t>()),
                  k->convert_to<std::uint64_t>()};
}

// ---- trace ----

struct TraceArgs {
  std::string m;
  std::string tower;
  std::uint64_t base0 = 2;
  std::string schedule = "const:1";
  std::uint64_t max_steps = 1000;
  std::uint64_t digit_cap = kDefaultDigitCap;
  std::string format = "text";
  std::string out;
};

void write_text_trace(std::ostream& os, const TraceDocument& doc) {
  os << "start: m=" << (doc.m ? *doc.m : "(beyond digit cap)")
     << " base0=" << doc.base0 << " schedule=" << schedule_spec(doc.schedule)
     << " digit_cap=" << doc.digit_cap << "\n";
  for (const TraceRecord& r : doc.records) {
    os << "n=" << r.n << " base=" << r.base_after << " d=" << r.d
       << " digits10=" << digits_text(r.digits10);
    if (r.value) os << " value=" << *r.value;
    os << "\n  form:  " << r.form << "\n  shape: " << r.shape << "\n";
  }
}

std::string outcome_line(const RunOutcome& outcome) {
  switch (outcome.kind) {
    case OutcomeKind::terminated_at:
      return "outcome: terminated_at step=" + std::to_string(outcome.step);
    case OutcomeKind::step_budget_exhausted:
      return "outcome: step_budget_exhausted steps=" +
             std::to_string(outcome.step);
    case OutcomeKind::schedule_exhausted:
      return "outcome: schedule_exhausted steps=" +
             std::to_string(outcome.step);
  }
  return "outcome: ?";
}

int run_trace(const TraceArgs& args) {
  if (args.m.empty() == args.tower.empty()) {
    usage_error("exactly one of --m and --tower is required");
  }
  Schedule schedule = parse_schedule_spec(args.schedule);

  TraceDocument doc;
  doc.schedule = schedule;
  doc.digit_cap = args.digit_cap;

  std::optional<HForm> start;
  if (!args.m.empty()) {
    auto m = parse_decimal(args.m);
    if (!m) usage_error("--m expects a decimal natural");
    if (args.base0 < 2) usage_error("--base0 must be at least 2");
    start = from_natural(*m, Base(args.base0));
    doc.m = to_decimal(*m);
  } else {
    TowerArg tower = parse_tower(args.tower);
    start = tower_form(tower.base, tower.levels);
    if (auto v = evaluate(*start, args.digit_cap)) doc.m = to_decimal(*v);
  }
  doc.base0 = start->base().value();

  doc.records.reserve(
      args.max_steps < 100000 ? static_cast<std::size_t>(args.max_steps) + 1
                              : 100001);
  doc.outcome =
      run(*start, schedule, args.max_steps, args.digit_cap,
          [&doc](const TraceRecord& r) { doc.records.push_back(r); });

  std::ofstream file;
  bool to_file = !args.out.empty();
  if (to_file) {
    file.open(args.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open " << args.out << " for writing\n";
      return kUsage;
    }
  }
  std::ostream& os = to_file ? file : std::cout;

  if (args.format == "json") {
    os << trace_to_json(doc).dump(2) << "\n";
    (to_file ? std::cout : std::cerr) << outcome_line(doc.outcome) << "\n";
  } else if (args.format == "csv") {
    os << trace_to_csv(doc);
    (to_file ? std::cout : std::cerr) << outcome_line(doc.outcome) << "\n";
  } else {
    write_text_trace(os, doc);
    os << outcome_line(doc.outcome) << "\n";
  }
  return kOk;
}

// ---- verify ----

int report_and_exit(const std::vector<SuiteReport>& reports) {
  std::uint64_t failures = 0;
  for (const SuiteReport& r : reports) {
    std::cout << "suite: " << r.suite << "\ncases: " << r.cases
              << "\nfailures: " << r.failures << "\n";
    if (!r.ok()) {
      std::cout << "first failure: " << r.first_failure << "\n";
    }
    failures += r.failures;
  }
  return failures == 0 ? kOk : kFailure;
}

// ---- shared helpers ----

HForm parse_start(const std::string& m_text, const std::string& tower_text,
                  std::uint64_t base0) {
  if (m_text.empty() == tower_text.empty()) {
    usage_error("exactly one of --m and --tower is required");
  }
  if (!m_text.empty()) {
    auto m = parse_decimal(m_text);
    if (!m) usage_error("--m expects a decimal natural");
    if (base0 < 2) usage_error("--base0 must be at least 2");
    return from_natural(*m, Base(base0));
  }
  TowerArg tower = parse_tower(tower_text);
  return tower_form(tower.base, tower.levels);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic engine for classic and generalized Goodstein "
               "sequences"};
  app.require_subcommand(1);

  // trace
  TraceArgs trace_args;
  CLI::App* trace_cmd =
      app.add_subcommand("trace", "Run a sequence and write its trace");
  trace_cmd->add_option("--m", trace_args.m, "start value (decimal)");
  auto* trace_tower = trace_cmd->add_option(
      "--tower", trace_args.tower, "start from a power tower a,k (base a)");
  auto* trace_base0 = trace_cmd->add_option("--base0", trace_args.base0,
                                            "starting base (default 2)");
  trace_tower->excludes(trace_base0);
  trace_cmd->add_option("--schedule", trace_args.schedule,
                        "const:<d> | list:<d1>,...[,repeat|,strict] | "
                        "rand:<seed>:<d_min>:<d_max>");
  trace_cmd->add_option("--max-steps", trace_args.max_steps, "step budget");
  trace_cmd->add_option("--digit-cap", trace_args.digit_cap,
                        "decimal digit cap for exact values");
  trace_cmd->add_option("--format", trace_args.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  trace_cmd->add_option("--out", trace_args.out, "output path (default stdout)");

  // verify
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a property suite and report");
  std::string suite;
  verify_cmd
      ->add_option("suite", suite,
                   "ordinal | identity | monotone | compare-oracle | "
                   "decrement-oracle")
      ->required()
      ->check(CLI::IsMember({"ordinal", "identity", "monotone",
                             "compare-oracle", "decrement-oracle"}));
  std::uint64_t a_max = 50, b_max = 50;
  verify_cmd->add_option("--a-max", a_max, "identity: largest base");
  verify_cmd->add_option("--b-max", b_max, "identity: largest exponent");
  std::uint64_t x_max = 128, steps = 0;
  verify_cmd->add_option("--x-max", x_max, "monotone: largest start value");
  verify_cmd->add_option("--steps", steps, "steps per run");
  std::uint64_t schedules = 0, d_max = 10, seed = 1, vbase0 = 2;
  verify_cmd->add_option("--schedules", schedules,
                         "monotone: number of seeded schedules");
  verify_cmd->add_option("--d-max", d_max, "largest seeded increment");
  verify_cmd->add_option("--seed", seed, "seed for randomized suites");
  verify_cmd->add_option("--base0", vbase0, "starting base");
  std::string vm, vtower, vschedule = "const:1";
  verify_cmd->add_option("--m", vm, "ordinal: start value");
  verify_cmd->add_option("--tower", vtower, "ordinal: start from tower a,k");
  verify_cmd->add_option("--schedule", vschedule, "ordinal: schedule spec");
  std::uint64_t cases = 10000;
  verify_cmd->add_option("--cases", cases, "randomized suite case count");

  // bound
  CLI::App* bound_cmd = app.add_subcommand(
      "bound", "Least tower height over a reaching a target value");
  std::uint64_t bound_a = 2;
  std::string bound_b;
  bound_cmd->add_option("--a", bound_a, "tower base (>= 2)")->required();
  bound_cmd->add_option("--b", bound_b, "target value (decimal)")->required();

  // eval
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "Parse or build a form; print rendering, shape, size, value");
  std::string eval_text, eval_m;
  std::uint64_t eval_base = 2, eval_cap = kDefaultDigitCap;
  eval_cmd->add_option("form", eval_text, "form text (see grammar)");
  eval_cmd->add_option("--m", eval_m, "build from a decimal value instead");
  eval_cmd->add_option("--base", eval_base, "base for --m (default 2)");
  eval_cmd->add_option("--digit-cap", eval_cap, "decimal digit cap");

  try {
    app.parse(argc, argv);

    if (trace_cmd->parsed()) return run_trace(trace_args);

    if (verify_cmd->parsed()) {
      if (suite == "identity") {
        return report_and_exit({verify_identity_suite(a_max, b_max)});
      }
      if (suite == "monotone") {
        if (steps == 0) steps = 10;
        std::vector<SuiteReport> reports;
        reports.push_back(verify_monotone_classic(x_max, steps));
        if (schedules > 0) {
          reports.push_back(verify_monotone_schedules(
              x_max, steps, schedules, d_max, seed, Base(vbase0)));
        }
        return report_and_exit(reports);
      }
      if (suite == "ordinal") {
        if (steps == 0) steps = 1000;
        if (vm.empty() && vtower.empty()) vm = "16";
        HForm start = parse_start(vm, vtower, vbase0);
        return report_and_exit(
            {verify_ordinal_trace(start, parse_schedule_spec(vschedule),
                                  steps)});
      }
      if (suite == "compare-oracle") {
        return report_and_exit({verify_compare_oracle(cases, seed)});
      }
      return report_and_exit({verify_decrement_oracle(cases, seed)});
    }

    if (bound_cmd->parsed()) {
      if (bound_a < 2) usage_error("--a must be at least 2");
      auto b = parse_decimal(bound_b);
      if (!b || *b < 1) usage_error("--b expects a decimal natural >= 1");
      std::cout << tower_bound(Base(bound_a), *b) << "\n";
      return kOk;
    }

    // eval
    if (eval_text.empty() == eval_m.empty()) {
      usage_error("exactly one of a form argument and --m is required");
    }
    std::optional<HForm> f;
    if (!eval_m.empty()) {
      auto m = parse_decimal(eval_m);
      if (!m) usage_error("--m expects a decimal natural");
      if (eval_base < 2) usage_error("--base must be at least 2");
      f = from_natural(*m, Base(eval_base));
    } else {
      f = parse_form(eval_text);
    }
    std::cout << "form: " << render(*f) << "\n"
              << "shape: " << render(shape_of(*f)) << "\n"
              << "digits10: " << digits_text(estimate_digits(*f)) << "\n";
    if (auto v = evaluate(*f, eval_cap)) {
      std::cout << "value: " << to_decimal(*v) << "\n";
    } else {
      std::cout << "value: too large\n";
    }
    return kOk;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const ordinal_error& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
