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
#include "nestedepi/sensitivity.hpp"
#include "nestedepi/analysis.hpp"
#include "nestedepi/error.hpp"

#include <algorithm>

namespace nestedepi
{

std::optional<double> ElasticityReport::at(BetweenHostField f) const
{
    const auto it = std::find(all_between_host_fields.begin(), all_between_host_fields.end(), f);
    return values[static_cast<std::size_t>(it - all_between_host_fields.begin())];
}

namespace
{

std::size_t slot(BetweenHostField f)
{
    return static_cast<std::size_t>(
        std::find(all_between_host_fields.begin(), all_between_host_fields.end(), f) -
        all_between_host_fields.begin());
}

} // namespace

ElasticityReport elasticity_closed_form(const BetweenHostParams& p)
{
    if (!(compute_R0(p) > 0)) {
        throw ParameterError("R0", "elasticities are undefined when R0 = 0");
    }
    const double K1 = p.mu + p.pi + p.gamma1;
    const double K2 = p.mu + p.gamma2 + p.d * p.N_h;

    // Denominator of R0 as a cubic in mu and its derivative.
    const double lin      = p.pi + p.gamma1 + p.gamma2 + p.d * p.N_h;
    const double cross    = (p.gamma2 + p.d * p.N_h) * (p.pi + p.gamma1);
    const double denom    = p.mu * (p.mu * (p.mu + lin) + cross);
    const double denom_mu = 3.0 * p.mu * p.mu + 2.0 * p.mu * lin + cross;

    ElasticityReport r;
    r.method                                    = ElasticityMethod::closed_form;
    r.values[slot(BetweenHostField::beta)]      = 1.0;
    r.values[slot(BetweenHostField::Lambda)]    = 1.0;
    r.values[slot(BetweenHostField::pi)]        = (p.mu + p.gamma1) / K1;
    r.values[slot(BetweenHostField::mu)]        = -p.mu * denom_mu / denom;
    r.values[slot(BetweenHostField::gamma1)]    = -p.gamma1 / K1;
    r.values[slot(BetweenHostField::gamma2)]    = -p.gamma2 / K2;
    r.values[slot(BetweenHostField::N_h)]       = (p.mu + p.gamma2) / K2;
    r.values[slot(BetweenHostField::d)]         = -p.d * p.N_h / K2;
    return r;
}

ElasticityReport elasticity_finite_difference(const BetweenHostParams& p, double rel_step)
{
    if (!(rel_step > 0.0 && rel_step <= 0.01)) {
        throw ParameterError("rel_step", "must lie in (0, 0.01]");
    }
    const double base = compute_R0(p);
    if (!(base > 0)) {
        throw ParameterError("R0", "elasticities are undefined when R0 = 0");
    }

    using Ext = long double;
    const auto r0_ext = [](const std::array<Ext, 8>& v) {
        // v is ordered like all_between_host_fields: beta, Lambda, pi, mu, gamma1, gamma2, N_h, d
        return detail::reproduction_number<Ext>(v[0], v[1], v[2], v[3], v[4], v[5], v[7], v[6]);
    };

    std::array<Ext, 8> values{};
    for (std::size_t i = 0; i < 8; ++i) {
        values[i] = get(p, all_between_host_fields[i]);
    }
    const Ext center = r0_ext(values);
    const Ext h      = rel_step;

    ElasticityReport r;
    r.method = ElasticityMethod::finite_difference;
    for (std::size_t i = 0; i < 8; ++i) {
        if (values[i] == 0) {
            continue;
        }
        auto up = values, down = values;
        up[i] *= 1 + h;
        down[i] *= 1 - h;
        r.values[i] = static_cast<double>((r0_ext(up) - r0_ext(down)) / (2 * h * center));
    }
    return r;
}

} // namespace nestedepi
