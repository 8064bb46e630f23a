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
#ifndef NESTEDEPI_SWEEPS_HPP
#define NESTEDEPI_SWEEPS_HPP

#include "nestedepi/between_host.hpp"
#include "nestedepi/coupling.hpp"
#include "nestedepi/execution.hpp"
#include "nestedepi/within_host.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nestedepi
{

enum class Branch
{
    E0,
    E1,
};

std::string_view to_string(Branch b);

struct SweepCell {
    double R0 = 0.0;
    Branch stable_equilibrium = Branch::E0;
    std::optional<double> I_star; ///< endemic I*, present iff R0 > 1
};

struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

/// Cells are stored row-major by (y index, x index).
struct SweepGrid {
    SweepAxis x;
    std::optional<SweepAxis> y;
    std::vector<SweepCell> cells;

    std::size_t nx() const
    {
        return x.values.size();
    }
    std::size_t ny() const
    {
        return y ? y->values.size() : 1;
    }
    const SweepCell& at(std::size_t ix, std::size_t iy = 0) const
    {
        return cells[iy * nx() + ix];
    }
};

struct AxisSpec {
    std::string name;
    double lo      = 0.0;
    double hi      = 0.0;
    std::size_t n  = 0;
};

/// n evenly spaced values with both end points exact.
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// R0, endemic I* and the stable branch for one parameter set.
SweepCell evaluate_cell(const BetweenHostParams& p);

SweepGrid bifurcation_sweep(const BetweenHostParams& base, double beta_lo, double beta_hi, std::size_t n_points,
                            Execution exec = Execution::parallel);

/// beta at which R0 - 1 changes sign, linearly interpolated between the bracketing points.
std::optional<double> branch_exchange(const SweepGrid& sweep);

SweepGrid heat_grid(const BetweenHostParams& base, const AxisSpec& x, const AxisSpec& y,
                    Execution exec = Execution::parallel);

enum class WithinHostKnob
{
    alpha,
    x,
    y,
};

std::string_view to_string(WithinHostKnob k);
WithinHostKnob parse_knob(std::string_view name);

struct InfluenceOptions {
    double horizon           = 100.0;
    BetweenHostState initial = baseline_between_host_state();
    CouplingSetup coupling{};
    IntegratorConfig integrator{};
};

struct InfluenceRun {
    double value = 0.0;
    CouplingSummary coupling;
    double R0 = 0.0;
    Trajectory trajectory;
};

/**
 * For each value of the within-host knob: recompute N_h, rebuild the
 * between-host parameters with it and simulate the SEI model.
 */
std::vector<InfluenceRun> within_host_influence(const WithinHostParams& base_wh, const BetweenHostParams& base_bh,
                                                WithinHostKnob knob, std::span<const double> values,
                                                const InfluenceOptions& options = {},
                                                Execution exec                  = Execution::parallel);

} // namespace nestedepi

#endif // NESTEDEPI_SWEEPS_HPP
