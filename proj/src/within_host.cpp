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
#include "nestedepi/within_host.hpp"
#include "nestedepi/error.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace nestedepi
{

namespace
{

void require_finite_nonneg(double v, const char* name)
{
    if (!std::isfinite(v) || v < 0) {
        throw ParameterError(name, "must be finite and non-negative");
    }
}

void require_positive(double v, const char* name)
{
    if (!std::isfinite(v) || !(v > 0)) {
        throw ParameterError(name, "must be finite and positive");
    }
}

} // namespace

WithinHostParams WithinHostParams::from_rates(double omega, double k, double mu_c, double mu_v, double alpha,
                                              const ClearanceRates& rates)
{
    WithinHostParams p;
    p.omega   = omega;
    p.k       = k;
    p.mu_c    = mu_c;
    p.mu_v    = mu_v;
    p.alpha   = alpha;
    p.m_x     = std::accumulate(rates.infected_cell.begin(), rates.infected_cell.end(), 0.0);
    p.m_y     = std::accumulate(rates.virion.begin(), rates.virion.end(), 0.0);
    p.m_rates = rates;
    return p;
}

WithinHostParams WithinHostParams::from_aggregates(double omega, double k, double mu_c, double mu_v, double alpha,
                                                   double x, double y)
{
    WithinHostParams p;
    p.omega = omega;
    p.k     = k;
    p.mu_c  = mu_c;
    p.mu_v  = mu_v;
    p.alpha = alpha;
    p.m_x   = x;
    p.m_y   = y;
    return p;
}

WithinHostParams WithinHostParams::with_x(double x) const
{
    auto p    = *this;
    p.m_x     = x;
    p.m_rates = std::nullopt;
    return p;
}

WithinHostParams WithinHostParams::with_y(double y) const
{
    auto p    = *this;
    p.m_y     = y;
    p.m_rates = std::nullopt;
    return p;
}

void WithinHostParams::validate() const
{
    require_positive(omega, "omega");
    require_finite_nonneg(k, "k");
    require_positive(mu_c, "mu_c");
    require_positive(mu_v, "mu_v");
    require_positive(alpha, "alpha");
    if (m_rates) {
        for (std::size_t i = 0; i < 6; ++i) {
            require_finite_nonneg(m_rates->infected_cell[i], ("d" + std::to_string(i + 1)).c_str());
            require_finite_nonneg(m_rates->virion[i], ("b" + std::to_string(i + 1)).c_str());
        }
    }
    require_finite_nonneg(m_x, "x");
    require_finite_nonneg(m_y, "y");
}

WithinHostParams baseline_within_host_params()
{
    return WithinHostParams::from_rates(2.0, 0.05, 0.1, 0.1, 0.24,
                                        {{0.027, 0.22, 0.1, 0.428, 0.01, 0.01}, {0.1, 0.1, 0.08, 0.11, 0.01, 0.07}});
}

WithinHostState baseline_within_host_state()
{
    return {3.2e5, 0.0, 5.2};
}

std::array<double, 3> within_host_rhs(const WithinHostParams& p, const WithinHostState& s)
{
    const double infection = p.k * s.U * s.V;
    return {
        p.omega - infection - p.mu_c * s.U,
        infection - p.x() * s.U_star - p.mu_c * s.U_star,
        p.alpha * s.U_star - p.y() * s.V - p.mu_v * s.V,
    };
}

OdeSystem within_host_system(const WithinHostParams& p)
{
    return {3, [p](double, std::span<const double> y, std::span<double> dydt) {
                const auto d = within_host_rhs(p, {y[0], y[1], y[2]});
                std::copy(d.begin(), d.end(), dydt.begin());
            },
            true};
}

void check_within_host_positivity(const Trajectory& trajectory, double tolerance)
{
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        for (std::size_t c = 0; c < trajectory.dimension(); ++c) {
            if (trajectory.value(i, c) < -tolerance) {
                throw InvariantViolation("within-host component " + std::to_string(c) + " negative (" +
                                         std::to_string(trajectory.value(i, c)) + ") at s=" +
                                         std::to_string(trajectory.times()[i]));
            }
        }
    }
}

Trajectory simulate_within_host(const WithinHostParams& p, const WithinHostState& initial, double horizon,
                                const IntegratorConfig& config)
{
    p.validate();
    require_finite_nonneg(initial.U, "U0");
    require_finite_nonneg(initial.U_star, "U_star0");
    require_finite_nonneg(initial.V, "V0");
    require_positive(horizon, "horizon");
    const auto y0 = initial.as_array();
    auto traj     = integrate(within_host_system(p), y0, 0.0, horizon, config);
    check_within_host_positivity(traj);
    return traj;
}

} // namespace nestedepi
