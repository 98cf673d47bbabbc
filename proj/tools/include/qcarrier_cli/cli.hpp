#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

/// Scenario runner behind the `qcarrier` executable.
namespace qcarrier::cli {

using Json = nlohmann::ordered_json;

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

/// Malformed, incomplete or contradictory configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure to read inputs or write artifacts.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& scenario_names();

/// A parsed configuration document. Unknown keys are rejected on
/// construction; required fields are checked by each scenario.
struct RunConfig {
  std::string scenario;
  Json document;
  /// Directory of the config file; relative input paths resolve against it.
  std::filesystem::path base_dir;
  std::filesystem::path output_dir;
  std::optional<std::uint64_t> seed;
  bool timestamp = true;
};

/// Reads a JSON document, applies dotted `key=value` overrides and
/// validates the key set. Throws ConfigError / IoError.
Json load_config_document(const std::filesystem::path& path,
                          const std::vector<std::string>& overrides);

/// Applies one `a.b.c=value` override in place. The value is parsed as JSON
/// when possible and kept as a string otherwise.
void apply_override(Json& document, const std::string& assignment);

/// Throws ConfigError on any key outside the schema.
void validate_keys(const Json& document);

struct Assertion {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  /// "le": value <= tolerance; "gt": value > tolerance; "eq": value == tolerance.
  std::string relation = "le";
  bool pass = false;
};

struct ScenarioResult {
  std::vector<Assertion> assertions;
  Json details = Json::object();
  std::vector<std::string> outputs;

  bool all_pass() const;
  Assertion& check(std::string name, double value, double tolerance,
                   std::string relation = "le");
};

/// Runs the scenario, writing report.json and series_*.csv into
/// config.output_dir. Returns the exit status.
int run_scenario(const RunConfig& config);

/// Two epoch series: seeded random action epochs (sorted ascending) and the
/// uniform epochs k xi_bar, k = 1..n. Columns: index,random_epoch,uniform_epoch.
std::string emit_timeline(std::size_t n, double xi_bar, std::uint64_t seed);

/// JSON text with every floating-point number written to 17 significant
/// digits. Non-finite numbers become null.
std::string dump_json(const Json& value);

/// Full command-line entry point.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qcarrier::cli
