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
#ifndef NESTEDEPI_EFFICACIES_HPP
#define NESTEDEPI_EFFICACIES_HPP

namespace nestedepi
{

/// Efficacies of the health interventions, each in [0, 1).
struct InterventionEfficacies {
    double epsilon = 0.0; ///< antiviral: burst rate alpha -> alpha(1 - epsilon)
    double gamma_k = 0.0; ///< cell entry inhibition: k -> k(1 - gamma_k)
    double delta   = 0.0; ///< immunomodulator: x, y -> x(1 + delta), y(1 + delta)
    double rho     = 0.0; ///< social distancing: beta -> beta(1 - rho)

    void validate() const;
    bool operator==(const InterventionEfficacies&) const = default;
};

} // namespace nestedepi

#endif // NESTEDEPI_EFFICACIES_HPP
