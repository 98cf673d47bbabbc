#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "qcarrier/spinor_io.hpp"
#include "scenarios.hpp"

namespace qcarrier::cli {

namespace {

using Runner = std::function<void(const detail::ScenarioContext&, ScenarioResult&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"group-demo", detail::run_group_demo},
      {"continuum-limit", detail::run_continuum_limit},
      {"two-level", detail::run_two_level},
      {"pse-free", detail::run_pse_free},
      {"pse-potential", detail::run_pse_potential},
      {"nu-zero", detail::run_nu_zero},
      {"dirac-verify", detail::run_dirac_verify},
  };
  return table;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const char* kUsageFooter =
    "\nScenarios: group-demo, continuum-limit, two-level, pse-free, pse-potential,\n"
    "           nu-zero, dirac-verify\n"
    "Exit status: 0 pass, 1 assertion failure, 2 config error, 3 I/O error.\n";

}  // namespace

namespace detail {

std::uint64_t ScenarioContext::seed() const {
  if (!config.seed) throw ConfigError("missing config field 'seed' (or --seed)");
  return *config.seed;
}

void ScenarioContext::write(ScenarioResult& result, const std::string& name,
                            const std::string& content) const {
  const auto path = config.output_dir / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  if (!out) throw IoError("cannot write " + path.string());
  result.outputs.push_back(name);
}

}  // namespace detail

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{
      "group-demo", "continuum-limit", "two-level", "pse-free",
      "pse-potential", "nu-zero", "dirac-verify"};
  return names;
}

int run_scenario(const RunConfig& config) {
  const auto runner = runners().find(config.scenario);
  if (runner == runners().end()) {
    throw ConfigError("unknown scenario '" + config.scenario + "'");
  }
  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + config.output_dir.string() + ": " +
                  ec.message());
  }

  ScenarioResult result;
  const detail::ScenarioContext ctx{config, detail::Fields(config.document, "")};
  try {
    runner->second(ctx, result);
  } catch (const CsvFormatError& e) {
    throw ConfigError(std::string("initial-state file: ") + e.what());
  }

  Json parameters = config.document;
  parameters.erase("output_dir");
  parameters.erase("seed");
  parameters.erase("scenario");

  Json report = Json::object();
  report["scenario"] = config.scenario;
  report["status"] = result.all_pass() ? "pass" : "fail";
  report["seed"] = config.seed ? Json(*config.seed) : Json(nullptr);
  if (config.timestamp) report["generated_at"] = utc_timestamp();
  report["parameters"] = parameters;
  Json assertions = Json::array();
  for (const auto& a : result.assertions) {
    assertions.push_back({{"name", a.name},
                          {"value", a.value},
                          {"relation", a.relation},
                          {"tolerance", a.tolerance},
                          {"pass", a.pass}});
  }
  report["assertions"] = assertions;
  report["details"] = result.details;
  report["outputs"] = result.outputs;

  ScenarioResult sink;
  ctx.write(sink, "report.json", dump_json(report));
  return result.all_pass() ? kExitOk : kExitAssertion;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-level carrier dynamics: scenario runner", "qcarrier"};
  app.footer(kUsageFooter);
  std::string scenario;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_dir;
  std::uint64_t seed = 0;
  bool no_timestamp = false;
  app.add_option("scenario", scenario, "Scenario name")->required();
  app.add_option("--config", config_path, "JSON config file")->required();
  app.add_option("--set", overrides, "Override a dotted config key: key=value")
      ->take_all()
      ->allow_extra_args(false);
  auto* output_opt = app.add_option("--output-dir", output_dir, "Artifact directory");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized sweeps");
  app.add_flag("--no-timestamp", no_timestamp, "Omit the report timestamp");

  const auto usage = [&] { err << app.help(); };
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    usage();
    return kExitConfig;
  }

  try {
    RunConfig config;
    config.scenario = scenario;
    if (std::find(scenario_names().begin(), scenario_names().end(), scenario) ==
        scenario_names().end()) {
      throw ConfigError("unknown scenario '" + scenario + "'");
    }
    config.document = load_config_document(config_path, overrides);
    config.base_dir = std::filesystem::path(config_path).parent_path();
    if (config.document.contains("scenario") &&
        config.document["scenario"] != Json(scenario)) {
      throw ConfigError("config names scenario " + config.document["scenario"].dump() +
                        " but '" + scenario + "' was requested");
    }
    if (*seed_opt) {
      config.seed = seed;
    } else if (config.document.contains("seed")) {
      const auto& s = config.document["seed"];
      if (!s.is_number_unsigned()) throw ConfigError("config field 'seed' must be a non-negative integer");
      config.seed = s.get<std::uint64_t>();
    }
    if (*output_opt) {
      config.output_dir = output_dir;
    } else if (config.document.contains("output_dir")) {
      if (!config.document["output_dir"].is_string()) {
        throw ConfigError("config field 'output_dir' must be a string");
      }
      config.output_dir = config.document["output_dir"].get<std::string>();
    } else {
      config.output_dir = ".";
    }
    config.timestamp = !no_timestamp;

    const int status = run_scenario(config);
    out << scenario << ": " << (status == kExitOk ? "pass" : "FAIL") << " ("
        << (config.output_dir / "report.json").string() << ")\n";
    return status;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n\n";
    usage();
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n\n";
    usage();
    return kExitConfig;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAssertion;
  }
}

}  // namespace qcarrier::cli
