/*
* Copyright (C) 2026 The nestedepi Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#ifndef NESTEDEPI_RUNNER_HPP
#define NESTEDEPI_RUNNER_HPP

#include "nestedepi/config.hpp"
#include "nestedepi/execution.hpp"
#include "nestedepi/sweeps.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nestedepi
{

enum class Command
{
    simulate,
    analyze,
    elasticity,
    bifurcate,
    heatmap,
    interventions,
    influence,
};

std::string_view to_string(Command c);
Command parse_command(std::string_view name);

/// Parses "name:lo:hi:n", e.g. "beta:1e-6:1e-4:50".
AxisSpec parse_axis_spec(std::string_view text);

struct RunOptions {
    std::filesystem::path out_dir;
    std::vector<std::string> overrides; ///< recorded in the manifest only
    std::string config_source;          ///< raw config text, hashed into the manifest

    AxisSpec grid_x{"beta", 1e-6, 1e-4, 50};
    AxisSpec grid_y{"d", 1e-3, 1e-1, 50};

    /// Defaults to (0.5, 2) times the critical beta.
    std::optional<std::pair<double, double>> beta_range;
    std::size_t beta_points = 101;

    std::vector<double> levels; ///< empty: take them from the config

    WithinHostKnob knob = WithinHostKnob::alpha;
    std::vector<double> knob_values; ///< empty: the knob's default set

    Execution exec  = Execution::parallel;
    double rel_step = 1e-6;
};

struct RunResult {
    std::vector<std::filesystem::path> outputs; ///< CSVs, normalized config, manifest
};

/**
 * Runs one subcommand and writes its CSVs, config.normalized.ini and
 * manifest.json into options.out_dir (created if missing).
 * Throws the library exceptions unchanged.
 */
RunResult run_subcommand(Command command, const ScenarioConfig& config, const RunOptions& options);

/// 1 validation or config error, 2 numerical failure, 3 I/O, 4 anything else.
int exit_status_for(const std::exception& e);

/**
 * Loads the config at config_path (baseline when empty), applies the
 * overrides, runs the command and reports failures on err. The output
 * directory falls back to [output] directory, then $NESTEDEPI_OUT, then
 * "out". Returns the
 * process exit status.
 */
int run_cli(Command command, const std::filesystem::path& config_path, RunOptions options, std::ostream& err);

} // namespace nestedepi

#endif // NESTEDEPI_RUNNER_HPP
