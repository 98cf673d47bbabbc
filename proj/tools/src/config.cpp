#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qcarrier_cli/cli.hpp"

namespace qcarrier::cli {

namespace {

using KeySet = std::set<std::string, std::less<>>;

// Allowed keys per object path. Arrays and scalars are leaves.
const std::map<std::string, KeySet, std::less<>>& schema() {
  static const std::map<std::string, KeySet, std::less<>> keys{
      {"", {"scenario", "seed", "output_dir", "grid", "physics", "initial",
            "schedule", "generator", "dirac", "group", "continuum", "timeline"}},
      {"grid", {"n", "q_min", "q_max"}},
      {"physics", {"m", "h0", "h1", "eps0", "potential"}},
      {"physics.potential", {"type", "omega", "center"}},
      {"initial", {"type", "center", "width", "momentum", "half_width", "edge",
                   "weight_a", "weight_b", "path", "a", "b"}},
      {"schedule", {"t_final", "dt", "snapshot_stride"}},
      {"generator", {"mu", "nu"}},
      {"dirac", {"m", "c", "p", "h0", "draws"}},
      {"group", {"history_pairs", "max_length", "circle_pairs"}},
      {"continuum", {"xi_bars", "history_length", "composition_pairs"}},
      {"timeline", {"n", "xi_bar"}},
  };
  return keys;
}

void validate_object(const Json& node, const std::string& path) {
  const auto& table = schema();
  const auto allowed = table.find(path);
  if (allowed == table.end()) {
    throw ConfigError("unexpected object at '" + path + "'");
  }
  for (const auto& [key, value] : node.items()) {
    const std::string child = path.empty() ? key : path + "." + key;
    if (!allowed->second.contains(key)) {
      throw ConfigError("unknown config key '" + child + "'");
    }
    if (value.is_object()) validate_object(value, child);
  }
}

Json parse_value(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    return Json(text);
  }
}

}  // namespace

void validate_keys(const Json& document) {
  if (!document.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  validate_object(document, "");
}

void apply_override(Json& document, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("override '" + assignment + "' is not of the form key=value");
  }
  const std::string key = assignment.substr(0, eq);
  Json* node = &document;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (part.empty()) throw ConfigError("empty path segment in '" + key + "'");
    if (!node->is_object()) {
      throw ConfigError("override '" + key + "' descends into a non-object");
    }
    node = &(*node)[part];
    if (dot == std::string::npos) break;
    if (node->is_null()) *node = Json::object();
    start = dot + 1;
  }
  *node = parse_value(assignment.substr(eq + 1));
}

Json load_config_document(const std::filesystem::path& path,
                          const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw ConfigError("config file " + path.string() + " is empty");
  }
  Json document;
  try {
    document = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!document.is_object()) throw ConfigError("config must be a JSON object");
  if (document.empty() && overrides.empty()) {
    throw ConfigError("config file " + path.string() + " is empty");
  }
  for (const auto& o : overrides) apply_override(document, o);
  validate_keys(document);
  return document;
}

}  // namespace qcarrier::cli
