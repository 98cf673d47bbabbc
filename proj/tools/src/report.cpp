#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qcarrier/continuum.hpp"
#include "qcarrier/random.hpp"
#include "qcarrier/spinor_io.hpp"
#include "qcarrier_cli/cli.hpp"

namespace qcarrier::cli {

namespace {

void write_string(std::ostream& out, const std::string& s) {
  out << Json(s).dump();
}

void write_value(std::ostream& out, const Json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) { out << "{}"; return; }
      out << "{\n";
      bool first = true;
      for (const auto& [key, child] : v.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        write_string(out, key);
        out << ": ";
        write_value(out, child, depth + 1);
      }
      out << '\n' << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) { out << "[]"; return; }
      out << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        write_value(out, v[i], depth + 1);
      }
      out << '\n' << close << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      if (std::isfinite(x)) out << format_double(x);
      else out << "null";
      return;
    }
    default:
      out << v.dump();
  }
}

}  // namespace

std::string dump_json(const Json& value) {
  std::ostringstream out;
  write_value(out, value, 0);
  out << '\n';
  return out.str();
}

bool ScenarioResult::all_pass() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const Assertion& a) { return a.pass; });
}

Assertion& ScenarioResult::check(std::string name, double value, double tolerance,
                                 std::string relation) {
  bool pass = false;
  if (relation == "le") pass = value <= tolerance;
  else if (relation == "gt") pass = value > tolerance;
  else if (relation == "eq") pass = value == tolerance;
  assertions.push_back({std::move(name), value, tolerance, std::move(relation), pass});
  return assertions.back();
}

std::string emit_timeline(std::size_t n, double xi_bar, std::uint64_t seed) {
  // Random intervals with the same mean as the uniform spacing; cumulative
  // sums keep the epochs in order.
  Rng rng(seed);
  std::ostringstream out;
  out << "index,random_epoch,uniform_epoch\n";
  double epoch = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    epoch += rng.uniform(0.0, 2.0 * xi_bar);
    out << k << ',' << format_double(epoch) << ','
        << format_double(uniform_register(static_cast<long>(k), xi_bar)) << '\n';
  }
  return out.str();
}

}  // namespace qcarrier::cli
