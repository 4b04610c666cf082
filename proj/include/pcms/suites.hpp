#pragma once

// Suite runners behind the CLI subcommands. Each runner assembles the
// module-level checks for one configured space into a single report.

#include <cstdint>
#include <optional>
#include <string>

#include "pcms/config.hpp"
#include "pcms/report.hpp"
#include "pcms/sweep.hpp"

namespace pcms {

struct SuiteOptions {
    std::optional<double> tol;  // overrides grids.tolerance
    std::uint64_t seed = 0;
    ExecMode mode = ExecMode::Parallel;
};

AxiomReport run_check_axioms(const SpaceConfig& cfg, const SuiteOptions& opts = {});
AxiomReport run_diameter(const SpaceConfig& cfg, const SuiteOptions& opts = {});
AxiomReport run_hausdorff(const SpaceConfig& cfg, const SuiteOptions& opts = {});
AxiomReport run_convexity(const SpaceConfig& cfg, const SuiteOptions& opts = {});
AxiomReport run_fixed_point(const SpaceConfig& cfg, const SuiteOptions& opts = {});
AxiomReport run_full_suite(const SpaceConfig& cfg, const SuiteOptions& opts = {});

// Dispatch by subcommand name; throws ConfigError for unknown names.
AxiomReport run_suite(const std::string& name, const SpaceConfig& cfg,
                      const SuiteOptions& opts = {});

}  // namespace pcms
