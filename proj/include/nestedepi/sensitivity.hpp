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
#ifndef NESTEDEPI_SENSITIVITY_HPP
#define NESTEDEPI_SENSITIVITY_HPP

#include "nestedepi/between_host.hpp"

#include <array>
#include <optional>

namespace nestedepi
{

enum class ElasticityMethod
{
    closed_form,
    finite_difference,
};

/// Normalized sensitivities (dR0/dp)(p/R0), indexed like all_between_host_fields.
struct ElasticityReport {
    ElasticityMethod method = ElasticityMethod::closed_form;
    /// Empty where the index is undefined (finite differences at p = 0).
    std::array<std::optional<double>, 8> values{};

    std::optional<double> at(BetweenHostField f) const;
};

/// Throws ParameterError when R0 = 0.
ElasticityReport elasticity_closed_form(const BetweenHostParams& p);

/**
 * Central differences of R0 under relative perturbations p(1 +- h).
 * R0 is evaluated in extended precision: some indices are ~1e-7 and the
 * cancellation in double would dominate the estimate.
 */
ElasticityReport elasticity_finite_difference(const BetweenHostParams& p, double rel_step = 1e-6);

} // namespace nestedepi

#endif // NESTEDEPI_SENSITIVITY_HPP
