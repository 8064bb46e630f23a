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
#include "nestedepi/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace
{

std::vector<double> parse_levels(const std::string& text)
{
    std::vector<double> levels;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        const double v   = std::stod(item, &used);
        if (used != item.size()) {
            throw CLI::ValidationError("--levels", "malformed number '" + item + "'");
        }
        levels.push_back(v);
    }
    return levels;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace nestedepi;

    CLI::App app{"Nested within-host / between-host epidemic model"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir;
    std::vector<std::string> sets;
    std::vector<std::string> grid;
    std::string levels;
    std::string beta_range;
    std::string knob = "alpha";
    std::string values;
    bool serial      = false;
    double rel_step  = 1e-6;

    app.add_option("--config", config_path, "Scenario file (INI); baseline when omitted")->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "Output directory (default: [output] directory, $NESTEDEPI_OUT, ./out)");
    app.add_option("--set", sets, "Override as section.key=value; repeatable, whitespace separates several");
    app.add_flag("--serial", serial, "Evaluate sweeps on one thread");

    struct Sub {
        Command command;
        const char* help;
    };
    const Sub subs[] = {
        {Command::simulate, "Simulate the within-host and between-host models"},
        {Command::analyze, "R0, equilibria, eigenvalues and Routh-Hurwitz classification"},
        {Command::elasticity, "Closed-form and finite-difference elasticities of R0"},
        {Command::bifurcate, "Critical beta, bifurcation direction and a beta sweep"},
        {Command::heatmap, "R0 over a two-parameter grid"},
        {Command::interventions, "Effectiveness of intervention combinations"},
        {Command::influence, "Between-host response to a within-host parameter"},
    };
    std::vector<std::pair<CLI::App*, Command>> commands;
    for (const auto& sub : subs) {
        auto* cmd = app.add_subcommand(std::string(to_string(sub.command)), sub.help);
        commands.emplace_back(cmd, sub.command);
        switch (sub.command) {
        case Command::elasticity:
            cmd->add_option("--rel-step", rel_step, "Relative step of the central difference");
            break;
        case Command::bifurcate:
            cmd->add_option("--beta-range", beta_range, "lo:hi:n (default 0.5 and 2 times the critical beta, 101)");
            break;
        case Command::heatmap:
            cmd->add_option("--grid", grid, "Two axes as name:lo:hi:n (default beta:1e-6:1e-4:50 d:0.001:0.1:50)")
                ->expected(2);
            break;
        case Command::interventions:
            cmd->add_option("--levels", levels, "Comma-separated efficacy levels");
            break;
        case Command::influence:
            cmd->add_option("--knob", knob, "alpha, x or y")->check(CLI::IsMember({"alpha", "x", "y"}));
            cmd->add_option("--values", values, "Comma-separated knob values");
            break;
        default:
            break;
        }
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    RunOptions options;
    options.out_dir = out_dir;
    for (const auto& s : sets) {
        std::istringstream in(s);
        std::string item;
        while (in >> item) {
            options.overrides.push_back(item);
        }
    }
    options.exec     = serial ? Execution::serial : Execution::parallel;
    options.rel_step = rel_step;
    options.knob     = parse_knob(knob);

    try {
        if (grid.size() == 2) {
            options.grid_x = parse_axis_spec(grid[0]);
            options.grid_y = parse_axis_spec(grid[1]);
        }
        if (!levels.empty()) {
            options.levels = parse_levels(levels);
        }
        if (!values.empty()) {
            options.knob_values = parse_levels(values);
        }
        if (!beta_range.empty()) {
            const auto spec     = parse_axis_spec("beta:" + beta_range);
            options.beta_range  = std::pair{spec.lo, spec.hi};
            options.beta_points = spec.n;
        }
    }
    catch (const std::exception& e) {
        std::cerr << "nestedepi: " << e.what() << '\n';
        return 1;
    }

    for (const auto& [cmd, command] : commands) {
        if (cmd->parsed()) {
            return run_cli(command, config_path, options, std::cerr);
        }
    }
    return 1;
}
