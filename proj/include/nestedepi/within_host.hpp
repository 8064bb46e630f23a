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
#ifndef NESTEDEPI_WITHIN_HOST_HPP
#define NESTEDEPI_WITHIN_HOST_HPP

#include "nestedepi/integrator.hpp"

#include <array>
#include <optional>

namespace nestedepi
{

/// The six cytokine/chemokine mediated clearance rates of each kind.
struct ClearanceRates {
    std::array<double, 6> infected_cell{}; ///< d1..d6
    std::array<double, 6> virion{}; ///< b1..b6
    bool operator==(const ClearanceRates&) const = default;
};

/**
 * Parameters of the fast-scale cell/virus model.
 *
 * The dynamics only use the aggregate clearance rates x = sum(d_i) and
 * y = sum(b_i). Parameters may be built from the individual rates, in which
 * case they are kept for reporting, or from the aggregates directly.
 */
class WithinHostParams
{
public:
    double omega = 0.0; ///< cell production rate
    double k     = 0.0; ///< infection rate of susceptible cells
    double mu_c  = 0.0; ///< natural cell death rate
    double mu_v  = 0.0; ///< natural virion death rate
    double alpha = 0.0; ///< burst rate

    WithinHostParams() = default;

    static WithinHostParams from_rates(double omega, double k, double mu_c, double mu_v, double alpha,
                                       const ClearanceRates& rates);
    static WithinHostParams from_aggregates(double omega, double k, double mu_c, double mu_v, double alpha, double x,
                                            double y);

    double x() const noexcept
    {
        return m_x;
    }
    double y() const noexcept
    {
        return m_y;
    }
    const std::optional<ClearanceRates>& rates() const noexcept
    {
        return m_rates;
    }

    /// Copies with a replaced aggregate; individual rates are dropped.
    WithinHostParams with_x(double x) const;
    WithinHostParams with_y(double y) const;

    /// Throws ParameterError naming the first offending field.
    void validate() const;

    bool operator==(const WithinHostParams&) const = default;

private:
    double m_x = 0.0;
    double m_y = 0.0;
    std::optional<ClearanceRates> m_rates;
};

struct WithinHostState {
    double U      = 0.0; ///< susceptible epithelial cells
    double U_star = 0.0; ///< infected epithelial cells
    double V      = 0.0; ///< viral load

    std::array<double, 3> as_array() const
    {
        return {U, U_star, V};
    }
    bool operator==(const WithinHostState&) const = default;
};

namespace within_host_index
{
inline constexpr std::size_t U      = 0;
inline constexpr std::size_t U_star = 1;
inline constexpr std::size_t V      = 2;
} // namespace within_host_index

/// Parameter values of the published baseline scenario.
WithinHostParams baseline_within_host_params();
/// Initial cells 3.2e5, no infected cells, 5.2 virions.
WithinHostState baseline_within_host_state();

inline constexpr double default_within_host_horizon = 30.0;

std::array<double, 3> within_host_rhs(const WithinHostParams& p, const WithinHostState& s);

OdeSystem within_host_system(const WithinHostParams& p);

/// Throws InvariantViolation if any stored state drops below -tolerance.
void check_within_host_positivity(const Trajectory& trajectory, double tolerance = 1e-9);

Trajectory simulate_within_host(const WithinHostParams& p, const WithinHostState& initial,
                                double horizon = default_within_host_horizon, const IntegratorConfig& config = {});

} // namespace nestedepi

#endif // NESTEDEPI_WITHIN_HOST_HPP
