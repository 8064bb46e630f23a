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
#ifndef NESTEDEPI_INTERVENTIONS_HPP
#define NESTEDEPI_INTERVENTIONS_HPP

#include "nestedepi/between_host.hpp"
#include "nestedepi/coupling.hpp"
#include "nestedepi/efficacies.hpp"
#include "nestedepi/execution.hpp"
#include "nestedepi/within_host.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace nestedepi
{

/// A subset of {social distancing, immunomodulator, antiviral}.
struct Combo {
    bool rho     = false;
    bool delta   = false;
    bool epsilon = false;

    /// "none", or active members joined by '+' in the order rho, delta, epsilon.
    std::string name() const;
    int cardinality() const
    {
        return int(rho) + int(delta) + int(epsilon);
    }
    /// Efficacies with every active member set to level; gamma_k stays 0.
    InterventionEfficacies at_level(double level) const;
    /// true if every member of other is also a member of this.
    bool contains(const Combo& other) const;

    bool operator==(const Combo&) const = default;
};

/// The eight combinations in the order none, rho, delta, epsilon, rho+delta,
/// rho+epsilon, delta+epsilon, rho+delta+epsilon.
inline constexpr std::array<Combo, 8> all_combos{{
    {false, false, false},
    {true, false, false},
    {false, true, false},
    {false, false, true},
    {true, true, false},
    {true, false, true},
    {false, true, true},
    {true, true, true},
}};

/**
 * Effective reproduction number under treatment. N_m is recomputed from the
 * within-host model; base_bh.N_h is not used.
 */
double effective_R(const BetweenHostParams& base_bh, const WithinHostParams& base_wh,
                   const InterventionEfficacies& eff, const CouplingSetup& setup = {});

/// 100 (R0 - R_E) / R0. Throws ParameterError if R0 is not positive.
double pct_reduction(double R0, double R_E);

struct EffectivenessRow {
    Combo combo;
    double level         = 0.0;
    double R_E           = 0.0;
    double pct_reduction = 0.0;
    int rank             = 0; ///< 1 = least effective, 8 = most effective
};

struct EffectivenessTable {
    double level = 0.0;
    double R0    = 0.0;
    std::vector<EffectivenessRow> rows; ///< ordered like all_combos

    const EffectivenessRow& row(const Combo& c) const;
};

inline constexpr std::array<double, 3> default_efficacy_levels{0.3, 0.6, 0.9};

/// Ranks ascending by reduction; ties go to the smaller, then lexicographically smaller, combo.
void assign_ranks(std::vector<EffectivenessRow>& rows);

std::vector<EffectivenessTable> effectiveness_table(const BetweenHostParams& base_bh,
                                                    const WithinHostParams& base_wh,
                                                    std::span<const double> levels = default_efficacy_levels,
                                                    const CouplingSetup& setup     = {},
                                                    Execution exec                 = Execution::parallel);

} // namespace nestedepi

#endif // NESTEDEPI_INTERVENTIONS_HPP
