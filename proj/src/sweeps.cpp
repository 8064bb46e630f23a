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
#include "nestedepi/sweeps.hpp"
#include "nestedepi/analysis.hpp"
#include "nestedepi/error.hpp"
#include "parallel.hpp"

#include <cmath>

namespace nestedepi
{

std::string_view to_string(Branch b)
{
    return b == Branch::E0 ? "E0" : "E1";
}

std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    if (n < 2) {
        throw ParameterError("n", "at least two points are required");
    }
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    v.back() = hi;
    return v;
}

SweepCell evaluate_cell(const BetweenHostParams& p)
{
    const auto report = routh_hurwitz(p);
    SweepCell cell;
    cell.R0 = report.R0;
    if (report.E1) {
        cell.I_star = report.E1->I;
    }
    cell.stable_equilibrium = report.classification_E1 == Stability::stable ? Branch::E1 : Branch::E0;
    return cell;
}

SweepGrid bifurcation_sweep(const BetweenHostParams& base, double beta_lo, double beta_hi, std::size_t n_points,
                            Execution exec)
{
    if (!(beta_lo < beta_hi)) {
        throw ParameterError("beta_range", "lower bound must be below upper bound");
    }
    if (n_points < 3) {
        throw ParameterError("n_points", "at least three points are required");
    }
    base.validate();
    SweepGrid grid;
    grid.x = {"beta", linspace(beta_lo, beta_hi, n_points)};
    grid.cells.resize(n_points);
    detail::for_each_index(n_points, exec, [&](std::size_t i) {
        auto p           = base;
        p.beta           = grid.x.values[i];
        grid.cells[i]    = evaluate_cell(p);
    });
    return grid;
}

std::optional<double> branch_exchange(const SweepGrid& sweep)
{
    for (std::size_t i = 0; i + 1 < sweep.nx(); ++i) {
        const double a = sweep.at(i).R0 - 1.0;
        const double b = sweep.at(i + 1).R0 - 1.0;
        if ((a < 0.0) != (b < 0.0)) {
            const double x0 = sweep.x.values[i], x1 = sweep.x.values[i + 1];
            return x0 + (0.0 - a) / (b - a) * (x1 - x0);
        }
    }
    return std::nullopt;
}

SweepGrid heat_grid(const BetweenHostParams& base, const AxisSpec& x, const AxisSpec& y, Execution exec)
{
    const auto fx = parse_field(x.name);
    const auto fy = parse_field(y.name);
    if (x.n < 2 || y.n < 2) {
        throw ParameterError("grid", "each axis needs at least two points");
    }
    base.validate();
    SweepGrid grid;
    grid.x = {x.name, linspace(x.lo, x.hi, x.n)};
    grid.y = SweepAxis{y.name, linspace(y.lo, y.hi, y.n)};
    grid.cells.resize(x.n * y.n);
    detail::for_each_index(grid.cells.size(), exec, [&](std::size_t idx) {
        const std::size_t iy = idx / x.n;
        const std::size_t ix = idx % x.n;
        auto p               = base;
        set(p, fx, grid.x.values[ix]);
        set(p, fy, grid.y->values[iy]);
        grid.cells[idx] = evaluate_cell(p);
    });
    return grid;
}

std::string_view to_string(WithinHostKnob k)
{
    switch (k) {
    case WithinHostKnob::alpha:
        return "alpha";
    case WithinHostKnob::x:
        return "x";
    case WithinHostKnob::y:
        return "y";
    }
    return "?";
}

WithinHostKnob parse_knob(std::string_view name)
{
    for (auto k : {WithinHostKnob::alpha, WithinHostKnob::x, WithinHostKnob::y}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw ParameterError(std::string(name), "unknown within-host parameter, expected alpha, x or y");
}

std::vector<InfluenceRun> within_host_influence(const WithinHostParams& base_wh, const BetweenHostParams& base_bh,
                                                WithinHostKnob knob, std::span<const double> values,
                                                const InfluenceOptions& options, Execution exec)
{
    for (double v : values) {
        if (!(v > 0) || !std::isfinite(v)) {
            throw ParameterError(std::string(to_string(knob)), "influence values must be positive");
        }
    }
    std::vector<InfluenceRun> runs(values.size());
    detail::for_each_index(values.size(), exec, [&](std::size_t i) {
        WithinHostParams wh = base_wh;
        switch (knob) {
        case WithinHostKnob::alpha:
            wh.alpha = values[i];
            break;
        case WithinHostKnob::x:
            wh = wh.with_x(values[i]);
            break;
        case WithinHostKnob::y:
            wh = wh.with_y(values[i]);
            break;
        }
        InfluenceRun run;
        run.value    = values[i];
        run.coupling = compute_Nh(wh, options.coupling);
        auto bh      = base_bh;
        bh.N_h       = run.coupling.N_h;
        run.R0       = compute_R0(bh);
        run.trajectory = simulate_between_host(bh, options.initial, options.horizon, options.integrator);
        runs[i]        = std::move(run);
    });
    return runs;
}

} // namespace nestedepi
