#pragma once

#include <filesystem>
#include <string>

#include "fields.hpp"
#include "qcarrier_cli/cli.hpp"

namespace qcarrier::cli::detail {

/// Everything a scenario needs besides its config fields.
struct ScenarioContext {
  const RunConfig& config;
  Fields root;
  std::uint64_t seed() const;
  /// Writes dir/name and records name in result.outputs. Throws IoError.
  void write(ScenarioResult& result, const std::string& name,
             const std::string& content) const;
};

void run_group_demo(const ScenarioContext& ctx, ScenarioResult& result);
void run_continuum_limit(const ScenarioContext& ctx, ScenarioResult& result);
void run_two_level(const ScenarioContext& ctx, ScenarioResult& result);
void run_pse_free(const ScenarioContext& ctx, ScenarioResult& result);
void run_pse_potential(const ScenarioContext& ctx, ScenarioResult& result);
void run_nu_zero(const ScenarioContext& ctx, ScenarioResult& result);
void run_dirac_verify(const ScenarioContext& ctx, ScenarioResult& result);

}  // namespace qcarrier::cli::detail
