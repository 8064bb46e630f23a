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
#ifndef NESTEDEPI_BETWEEN_HOST_HPP
#define NESTEDEPI_BETWEEN_HOST_HPP

#include "nestedepi/integrator.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace nestedepi
{

/// Slow-scale SEI parameters with the within-host scale folded into N_h.
struct BetweenHostParams {
    double Lambda = 0.0; ///< recruitment
    double beta   = 0.0; ///< transmission coefficient per virion
    double mu     = 0.0; ///< natural death rate
    double pi     = 0.0; ///< progression E -> I
    double gamma1 = 0.0; ///< recovery of exposed
    double gamma2 = 0.0; ///< recovery of infected
    double d      = 0.0; ///< disease induced death per virion
    double N_h    = 0.0; ///< area under the viral load curve

    void validate() const;
    bool operator==(const BetweenHostParams&) const = default;
};

/// Named access to BetweenHostParams, used by sweeps and sensitivity.
enum class BetweenHostField
{
    beta,
    Lambda,
    pi,
    mu,
    gamma1,
    gamma2,
    N_h,
    d,
};

inline constexpr std::array<BetweenHostField, 8> all_between_host_fields{
    BetweenHostField::beta,   BetweenHostField::Lambda, BetweenHostField::pi,  BetweenHostField::mu,
    BetweenHostField::gamma1, BetweenHostField::gamma2, BetweenHostField::N_h, BetweenHostField::d,
};

std::string_view field_name(BetweenHostField f);
/// Throws ParameterError for unknown names.
BetweenHostField parse_field(std::string_view name);
double get(const BetweenHostParams& p, BetweenHostField f);
void set(BetweenHostParams& p, BetweenHostField f, double value);

struct BetweenHostState {
    double S = 0.0;
    double E = 0.0;
    double I = 0.0;

    std::array<double, 3> as_array() const
    {
        return {S, E, I};
    }
    double total() const
    {
        return S + E + I;
    }
    bool operator==(const BetweenHostState&) const = default;
};

/// Lambda = mu * N(0).
double lambda_from_population(double mu, const BetweenHostState& initial);

/// Published slow-scale rates with Lambda = mu * 1150 and the supplied N_h.
BetweenHostParams baseline_between_host_params(double N_h);
/// (1000, 100, 50).
BetweenHostState baseline_between_host_state();

std::array<double, 3> between_host_rhs(const BetweenHostParams& p, const BetweenHostState& s);

OdeSystem between_host_system(const BetweenHostParams& p);

/// Throws InvariantViolation unless every component stays >= -positivity_tol and,
/// when the initial total is at most Lambda/mu, the total stays <= Lambda/mu + bound_tol.
void check_well_posed(const BetweenHostParams& p, const Trajectory& trajectory, double positivity_tol = 1e-9,
                      double bound_tol = 1e-6);

Trajectory simulate_between_host(const BetweenHostParams& p, const BetweenHostState& initial, double horizon,
                                 const IntegratorConfig& config = {});

/**
 * Recovered compartment dR/dt = gamma1 E + gamma2 I - mu R reconstructed
 * along a stored trajectory with the trapezoid rule (implicit in R).
 */
std::vector<double> reconstruct_recovered(const BetweenHostParams& p, const Trajectory& trajectory,
                                          double R0_initial = 0.0);

} // namespace nestedepi

#endif // NESTEDEPI_BETWEEN_HOST_HPP
