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
#ifndef NESTEDEPI_CONFIG_HPP
#define NESTEDEPI_CONFIG_HPP

#include "nestedepi/between_host.hpp"
#include "nestedepi/coupling.hpp"
#include "nestedepi/efficacies.hpp"
#include "nestedepi/integrator.hpp"
#include "nestedepi/within_host.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nestedepi
{

/**
 * A complete scenario. The text format is INI-style:
 *
 *     [within_host]
 *     omega = 2
 *     d1 = 0.027        ; d1..d6 and b1..b6, or the aggregates x and y
 *     U0 = 320000
 *     horizon = 30
 *
 *     [between_host]
 *     Lambda = auto     ; mu * (S0 + E0 + I0)
 *     beta = 0.0115
 *
 *     [coupling]
 *     detection_limit = 0
 *     method = adaptive_rk45
 *
 *     [interventions]
 *     rho = 0.3
 *     levels = 0.3,0.6,0.9
 *
 *     [output]
 *     directory = out
 *
 * Every key is optional and defaults to the published baseline. Unknown
 * sections or keys are rejected. See data/baseline.ini for the full key set.
 */
struct ScenarioConfig {
    struct WithinHost {
        WithinHostParams params = baseline_within_host_params();
        WithinHostState initial = baseline_within_host_state();
        double horizon          = default_within_host_horizon;
        bool operator==(const WithinHost&) const = default;
    };
    struct BetweenHost {
        /// N_h is derived by the coupling module and left at 0 here.
        BetweenHostParams params = baseline_between_host_params(0.0);
        bool lambda_auto         = true;
        BetweenHostState initial = baseline_between_host_state();
        double horizon           = 500.0;
        bool operator==(const BetweenHost&) const = default;
    };
    struct Coupling {
        double detection_limit = 0.0;
        IntegratorConfig integrator{};
        bool operator==(const Coupling&) const = default;
    };
    struct Interventions {
        InterventionEfficacies efficacies{};
        std::vector<double> levels{0.3, 0.6, 0.9};
        bool operator==(const Interventions&) const = default;
    };
    struct Output {
        std::string directory;
        bool recovered = false; ///< also reconstruct R(t) in simulate
        bool operator==(const Output&) const = default;
    };

    WithinHost within_host;
    BetweenHost between_host;
    Coupling coupling;
    Interventions interventions;
    Output output;

    CouplingSetup coupling_setup() const;
    /// Between-host parameters with the given N_h filled in.
    BetweenHostParams between_host_params(double N_h) const;

    /// Re-checks every module invariant; throws ParameterError.
    void validate() const;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Each override is "section.key=value"; overrides win over file values.
ScenarioConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

/// Throws IoError if the file cannot be read, ConfigError on syntax errors.
ScenarioConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});

/// Normalized text with every key spelled out; parse_config(to_ini(c)) == c.
std::string to_ini(const ScenarioConfig& config);

} // namespace nestedepi

#endif // NESTEDEPI_CONFIG_HPP
