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
#ifndef NESTEDEPI_COUPLING_HPP
#define NESTEDEPI_COUPLING_HPP

#include "nestedepi/efficacies.hpp"
#include "nestedepi/integrator.hpp"
#include "nestedepi/within_host.hpp"

namespace nestedepi
{

/// Interval during which the viral load is at or above the detection limit.
struct DetectionWindow {
    double s_begin = 0.0;
    double s_end   = 0.0;
};

/**
 * Result of collapsing the within-host scale into the composed parameter
 * N_h = alpha * integral(U*) / (y + mu_v).
 */
struct CouplingSummary {
    double N_h = 0.0;
    DetectionWindow window;
    double integral_Ustar  = 0.0;
    double detection_limit = 0.0;
    double horizon         = 0.0;
    double alpha           = 0.0; ///< burst rate used in the prefactor
    double y_plus_mu_v     = 0.0; ///< denominator used
    bool empty_window      = false; ///< V never reached the limit; N_h is 0
};

/// Everything needed to run the within-host model for a coupling value.
struct CouplingSetup {
    WithinHostState initial   = baseline_within_host_state();
    double horizon            = default_within_host_horizon;
    double detection_limit    = 0.0;
    IntegratorConfig integrator{};

    bool operator==(const CouplingSetup&) const = default;
};

/// Throws EmptyWindowError if V never reaches detection_limit.
DetectionWindow detection_window(const Trajectory& trajectory, double detection_limit);

/// Composite trapezoid of U* over the detection window of an existing trajectory.
CouplingSummary compute_Nh(const WithinHostParams& params, const Trajectory& trajectory, double detection_limit);

/// Simulates the within-host model and reduces it to N_h.
CouplingSummary compute_Nh(const WithinHostParams& params, const CouplingSetup& setup = {});

/// Within-host parameters under treatment: alpha(1-eps), k(1-gamma_k), x(1+delta), y(1+delta).
WithinHostParams apply_efficacies(const WithinHostParams& params, const InterventionEfficacies& eff);

/// N_m: N_h of the treated within-host model.
CouplingSummary compute_Nm(const WithinHostParams& params, const InterventionEfficacies& eff,
                           const CouplingSetup& setup = {});

} // namespace nestedepi

#endif // NESTEDEPI_COUPLING_HPP
