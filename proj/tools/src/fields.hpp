#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qcarrier/pauli.hpp"
#include "qcarrier_cli/cli.hpp"

namespace qcarrier::cli::detail {

/// Typed, path-aware read access to one object of the config document.
class Fields {
 public:
  Fields(const Json& node, std::string path) : node_(&node), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  bool has(const std::string& key) const {
    return node_->contains(key) && !(*node_)[key].is_null();
  }

  Fields section(const std::string& key) const {
    const Json& child = require(key);
    if (!child.is_object()) fail(key, "must be an object");
    return Fields(child, qualified(key));
  }

  double number(const std::string& key) const {
    const Json& v = require(key);
    if (!v.is_number()) fail(key, "must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(key, "must be finite");
    return x;
  }
  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }
  double positive(const std::string& key) const {
    const double x = number(key);
    if (!(x > 0.0)) fail(key, "must be > 0");
    return x;
  }

  std::int64_t integer(const std::string& key) const {
    const Json& v = require(key);
    if (!v.is_number_integer()) fail(key, "must be an integer");
    return v.get<std::int64_t>();
  }
  std::int64_t count(const std::string& key) const {
    const auto n = integer(key);
    if (n < 1) fail(key, "must be >= 1");
    return n;
  }

  std::string string(const std::string& key) const {
    const Json& v = require(key);
    if (!v.is_string()) fail(key, "must be a string");
    return v.get<std::string>();
  }

  /// Either a real number or a [re, im] pair.
  complex complex_value(const std::string& key) const {
    const Json& v = require(key);
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      return {v[0].get<double>(), v[1].get<double>()};
    }
    fail(key, "must be a number or a [re, im] pair");
  }
  complex complex_or(const std::string& key, complex fallback) const {
    return has(key) ? complex_value(key) : fallback;
  }

  std::vector<double> numbers(const std::string& key) const {
    const Json& v = require(key);
    if (!v.is_array() || v.empty()) fail(key, "must be a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) fail(key, "must be a non-empty array of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ConfigError("config field '" + qualified(key) + "' " + what);
  }

 private:
  std::string qualified(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }
  const Json& require(const std::string& key) const {
    if (!has(key)) throw ConfigError("missing config field '" + qualified(key) + "'");
    return (*node_)[key];
  }

  const Json* node_;
  std::string path_;
};

}  // namespace qcarrier::cli::detail
