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
#include "nestedepi/coupling.hpp"
#include "nestedepi/error.hpp"

#include <cmath>

namespace nestedepi
{

void InterventionEfficacies::validate() const
{
    const auto check = [](double v, const char* name) {
        if (!(v >= 0.0 && v < 1.0)) {
            throw ParameterError(name, "efficacy must lie in [0, 1)");
        }
    };
    check(epsilon, "epsilon");
    check(gamma_k, "gamma_k");
    check(delta, "delta");
    check(rho, "rho");
}

namespace
{

double crossing(double t0, double v0, double t1, double v1, double level)
{
    if (v1 == v0) {
        return t0;
    }
    return t0 + (level - v0) / (v1 - v0) * (t1 - t0);
}

} // namespace

DetectionWindow detection_window(const Trajectory& trajectory, double detection_limit)
{
    if (!(detection_limit >= 0.0)) {
        throw ParameterError("detection_limit", "must be non-negative");
    }
    if (trajectory.dimension() <= within_host_index::V || trajectory.size() == 0) {
        throw ParameterError("trajectory", "has no viral load component");
    }
    const auto& t        = trajectory.times();
    const std::size_t n  = trajectory.size();
    const auto V         = [&](std::size_t i) { return trajectory.value(i, within_host_index::V); };

    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (V(i) >= detection_limit) {
            first = i;
            break;
        }
    }
    if (first == n) {
        throw EmptyWindowError("viral load never reaches the detection limit " + std::to_string(detection_limit));
    }
    std::size_t last = first;
    for (std::size_t i = n; i-- > first;) {
        if (V(i) >= detection_limit) {
            last = i;
            break;
        }
    }

    DetectionWindow w;
    w.s_begin = first == 0 ? t[0] : crossing(t[first - 1], V(first - 1), t[first], V(first), detection_limit);
    w.s_end   = last == n - 1 ? t[n - 1] : crossing(t[last], V(last), t[last + 1], V(last + 1), detection_limit);
    return w;
}

namespace
{

// Trapezoid of the linear interpolant of U* over [a, b].
double integrate_ustar(const Trajectory& traj, double a, double b)
{
    const auto& t = traj.times();
    const auto u  = [&](std::size_t i) { return traj.value(i, within_host_index::U_star); };
    const auto interp = [&](std::size_t i, double s) {
        // s lies in [t[i], t[i+1]]
        const double w = (s - t[i]) / (t[i + 1] - t[i]);
        return (1.0 - w) * u(i) + w * u(i + 1);
    };

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
        const double lo = std::max(a, t[i]);
        const double hi = std::min(b, t[i + 1]);
        if (hi <= lo) {
            continue;
        }
        const double ulo = lo == t[i] ? u(i) : interp(i, lo);
        const double uhi = hi == t[i + 1] ? u(i + 1) : interp(i, hi);
        total += 0.5 * (hi - lo) * (ulo + uhi);
    }
    return total;
}

} // namespace

CouplingSummary compute_Nh(const WithinHostParams& params, const Trajectory& trajectory, double detection_limit)
{
    params.validate();
    CouplingSummary out;
    out.detection_limit = detection_limit;
    out.horizon         = trajectory.size() > 0 ? trajectory.t_end() - trajectory.t0() : 0.0;
    out.alpha           = params.alpha;
    out.y_plus_mu_v     = params.y() + params.mu_v;
    try {
        out.window = detection_window(trajectory, detection_limit);
    }
    catch (const EmptyWindowError&) {
        out.empty_window = true;
        out.window       = {trajectory.t0(), trajectory.t0()};
        return out;
    }
    out.integral_Ustar = integrate_ustar(trajectory, out.window.s_begin, out.window.s_end);
    out.N_h            = out.alpha * out.integral_Ustar / out.y_plus_mu_v;
    return out;
}

CouplingSummary compute_Nh(const WithinHostParams& params, const CouplingSetup& setup)
{
    const auto traj = simulate_within_host(params, setup.initial, setup.horizon, setup.integrator);
    return compute_Nh(params, traj, setup.detection_limit);
}

WithinHostParams apply_efficacies(const WithinHostParams& params, const InterventionEfficacies& eff)
{
    eff.validate();
    if (eff.epsilon == 0.0 && eff.gamma_k == 0.0 && eff.delta == 0.0) {
        return params;
    }
    auto treated = params.with_x(params.x() * (1.0 + eff.delta)).with_y(params.y() * (1.0 + eff.delta));
    treated.alpha = params.alpha * (1.0 - eff.epsilon);
    treated.k     = params.k * (1.0 - eff.gamma_k);
    return treated;
}

CouplingSummary compute_Nm(const WithinHostParams& params, const InterventionEfficacies& eff,
                           const CouplingSetup& setup)
{
    return compute_Nh(apply_efficacies(params, eff), setup);
}

} // namespace nestedepi
