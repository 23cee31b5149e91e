#include "hospfin/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "hospfin/assumptions.hpp"
#include "hospfin/central_plan.hpp"
#include "hospfin/error.hpp"
#include "hospfin/generator.hpp"
#include "hospfin/local_game.hpp"
#include "hospfin/report.hpp"
#include "hospfin/scenario_json.hpp"

namespace hospfin::cli {

namespace {

const std::map<std::string, Command> kCommands = {
    {"check", Command::check},
    {"local", Command::local},
    {"central-greedy", Command::central_greedy},
    {"central-exact", Command::central_exact},
    {"compare", Command::compare},
    {"gen", Command::gen},
};

std::string command_name(Command command) {
  for (const auto& [name, c] : kCommands) {
    if (c == command) return name;
  }
  return "check";
}

Dimensions parse_dims(const std::string& text) {
  const auto x = text.find_first_of("xX");
  try {
    if (x == std::string::npos) throw std::invalid_argument("missing 'x'");
    std::size_t used = 0;
    const auto q = std::stoul(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument("hospital count");
    const auto rest = text.substr(x + 1);
    const auto r = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("ward count");
    if (q < 1 || r < 1) throw std::invalid_argument("dimensions must be at least 1x1");
    return {q, r};
  } catch (const std::exception&) {
    throw InvalidInstance("dims", "expected QxR with positive integers, got '" + text + "'");
  }
}

struct Output {
  std::string text;
  std::string default_name;
};

int emit(const RunConfig& config, const Output& output, std::ostream& out, std::ostream& err) {
  std::optional<std::filesystem::path> path;
  if (config.output) {
    path = *config.output;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    path = std::filesystem::path(dir) / output.default_name;
  }
  if (!path) {
    out << output.text;
    return kExitOk;
  }
  std::ofstream file(*path);
  if (!file) {
    err << "error: cannot write output file '" << path->string() << "'\n";
    return kExitValidation;
  }
  file << output.text;
  if (config.verbose) err << "wrote " << path->string() << "\n";
  return kExitOk;
}

std::string extension(Format format) { return format == Format::json ? ".json" : ".txt"; }

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

Output execute(const RunConfig& config) {
  const std::string name = command_name(config.command);

  if (config.command == Command::gen) {
    if (!config.seed) throw InvalidInstance("seed", "gen requires --seed");
    if (!config.dims) throw InvalidInstance("dims", "gen requires --dims");
    const auto dims = parse_dims(*config.dims);
    GenerationProfile profile;
    try {
      profile = parse_profile(config.profile);
    } catch (const std::invalid_argument& e) {
      throw InvalidInstance("profile", e.what());
    }
    const auto inst = generate_scenario(*config.seed, dims, profile);
    return {scenario_to_json(inst).dump(2) + "\n", "scenario-" + std::to_string(*config.seed) + ".json"};
  }

  if (config.input.empty()) throw InvalidInstance("input", "--input is required for " + name);
  const auto inst = load_scenario(config.input);
  const bool json = config.format == Format::json;
  const std::string file_name = name + extension(config.format);

  switch (config.command) {
    case Command::check: {
      const auto reports = check_all_assumptions(inst);
      if (!json) return {assumptions_text(reports), file_name};
      auto list = Json::array();
      for (const auto& r : reports) list.push_back(to_json(r));
      return {json_text(Json{{"assumptions", list}}), file_name};
    }
    case Command::local: {
      const auto tensor = build_payoff_tensor(inst);
      const auto report = enumerate_pure_nash(tensor);
      const auto verdict = check_proposition1(inst, report);
      if (json) return {json_text(local_report_json(inst, tensor, report, verdict)), file_name};
      return {local_report_text(inst, tensor, report, verdict), file_name};
    }
    case Command::central_greedy:
    case Command::central_exact: {
      const bool greedy = config.command == Command::central_greedy;
      const auto sol = greedy ? greedy_solve(inst) : exact_solve(inst);
      std::optional<TotalOrders> orders;
      std::optional<StaircaseVerdict> staircase;
      if (check_assumption4(inst).holds() && check_assumption5(inst).holds()) {
        orders = total_orders(inst);
        if (greedy) staircase = check_proposition2(sol, *orders);
      }
      const std::string method = greedy ? "greedy" : "exact";
      if (json) return {json_text(plan_report_json(inst, sol, method, orders, staircase)), file_name};
      return {plan_report_text(inst, sol, method, orders, staircase, config.verbose), file_name};
    }
    case Command::compare: {
      const auto report = compare_regimes(inst);
      if (json) return {json_text(compare_report_json(inst, report)), file_name};
      return {compare_report_text(inst, report), file_name};
    }
    case Command::gen: break;
  }
  return {};
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  CLI::App app{"Hospital financing simulator: local game equilibria and central facility-location plans"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  for (const auto& [name, command] : kCommands) {
    auto* sub = app.add_subcommand(name);
    sub->callback([&config, command = command] { config.command = command; });
    if (command == Command::gen) {
      sub->description("write a seeded random scenario file");
      sub->add_option("--seed", config.seed, "random seed")->required();
      sub->add_option("--dims", config.dims, "dimensions QxR")->required();
      sub->add_option("--profile", config.profile,
                      "unconstrained | assumption1-satisfying | assumption4&5-satisfying");
    } else {
      sub->add_option("--input", config.input, "scenario JSON file")->required();
      sub->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    }
    sub->add_option("--output", config.output, "output file (default: stdout or $HOSPFIN_OUTPUT_DIR)");
    sub->add_flag("--verbose", config.verbose, "print greedy trace and per-cell assignments");
  }
  app.get_subcommand("check")->description("run the five assumption checkers");
  app.get_subcommand("local")->description("local financing: payoff table and pure Nash equilibria");
  app.get_subcommand("central-greedy")->description("central financing: greedy plan");
  app.get_subcommand("central-exact")->description("central financing: exact enumeration");
  app.get_subcommand("compare")->description("both regimes and the qualitative verdicts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err);
    if (exit_code != 0) exit_code = kExitValidation;
    return std::nullopt;
  }
  config.format = format == "json" ? Format::json : Format::text;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return emit(config, execute(config), out, err);
  } catch (const InvalidInstance& e) {
    err << "error: invalid instance: " << e.what() << "\n";
    return kExitValidation;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InstanceTooLarge& e) {
    err << "error: instance too large: " << e.what() << "\n";
    return kExitGuard;
  } catch (const AssumptionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const GenerationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  }
}

int main(int argc, const char* const* argv) {
  int exit_code = kExitOk;
  auto config = parse_args(argc, argv, std::cout, std::cerr, exit_code);
  if (!config) return exit_code;
  return run(*config, std::cout, std::cerr);
}

}  // namespace hospfin::cli
