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
#include "nestedepi/between_host.hpp"
#include "nestedepi/error.hpp"

#include <cmath>
#include <string>

namespace nestedepi
{

void BetweenHostParams::validate() const
{
    for (auto f : all_between_host_fields) {
        const double v = get(*this, f);
        if (!std::isfinite(v) || v < 0) {
            throw ParameterError(std::string(field_name(f)), "must be finite and non-negative");
        }
    }
    if (!(mu > 0)) {
        throw ParameterError("mu", "must be positive");
    }
}

std::string_view field_name(BetweenHostField f)
{
    switch (f) {
    case BetweenHostField::beta:
        return "beta";
    case BetweenHostField::Lambda:
        return "Lambda";
    case BetweenHostField::pi:
        return "pi";
    case BetweenHostField::mu:
        return "mu";
    case BetweenHostField::gamma1:
        return "gamma1";
    case BetweenHostField::gamma2:
        return "gamma2";
    case BetweenHostField::N_h:
        return "N_h";
    case BetweenHostField::d:
        return "d";
    }
    return "?";
}

BetweenHostField parse_field(std::string_view name)
{
    for (auto f : all_between_host_fields) {
        if (field_name(f) == name) {
            return f;
        }
    }
    throw ParameterError(std::string(name), "unknown between-host parameter name");
}

namespace
{

template <class P>
auto& field_ref(P& p, BetweenHostField f)
{
    switch (f) {
    case BetweenHostField::beta:
        return p.beta;
    case BetweenHostField::Lambda:
        return p.Lambda;
    case BetweenHostField::pi:
        return p.pi;
    case BetweenHostField::mu:
        return p.mu;
    case BetweenHostField::gamma1:
        return p.gamma1;
    case BetweenHostField::gamma2:
        return p.gamma2;
    case BetweenHostField::N_h:
        return p.N_h;
    case BetweenHostField::d:
        return p.d;
    }
    return p.beta;
}

} // namespace

double get(const BetweenHostParams& p, BetweenHostField f)
{
    return field_ref(p, f);
}

void set(BetweenHostParams& p, BetweenHostField f, double value)
{
    field_ref(p, f) = value;
}

double lambda_from_population(double mu, const BetweenHostState& initial)
{
    return mu * initial.total();
}

BetweenHostParams baseline_between_host_params(double N_h)
{
    BetweenHostParams p;
    p.mu     = 0.062;
    p.Lambda = lambda_from_population(p.mu, baseline_between_host_state());
    p.beta   = 0.0115;
    p.pi     = 0.09;
    p.gamma1 = 0.05;
    p.gamma2 = 0.0714;
    p.d      = 0.0018;
    p.N_h    = N_h;
    return p;
}

BetweenHostState baseline_between_host_state()
{
    return {1000.0, 100.0, 50.0};
}

std::array<double, 3> between_host_rhs(const BetweenHostParams& p, const BetweenHostState& s)
{
    const double incidence = p.beta * p.N_h * s.S * s.I;
    return {
        p.Lambda - incidence - p.mu * s.S,
        incidence - (p.mu + p.pi + p.gamma1) * s.E,
        p.pi * s.E - (p.mu + p.gamma2) * s.I - p.d * p.N_h * s.I,
    };
}

OdeSystem between_host_system(const BetweenHostParams& p)
{
    return {3, [p](double, std::span<const double> y, std::span<double> dydt) {
                const auto d = between_host_rhs(p, {y[0], y[1], y[2]});
                std::copy(d.begin(), d.end(), dydt.begin());
            },
            true};
}

void check_well_posed(const BetweenHostParams& p, const Trajectory& trajectory, double positivity_tol,
                      double bound_tol)
{
    static constexpr const char* names[] = {"S", "E", "I"};
    const double capacity = p.Lambda / p.mu;
    const auto first      = trajectory.state(0);
    const bool bounded    = first[0] + first[1] + first[2] <= capacity;
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        const auto s = trajectory.state(i);
        for (std::size_t c = 0; c < 3; ++c) {
            if (s[c] < -positivity_tol) {
                throw InvariantViolation(std::string(names[c]) + " negative (" + std::to_string(s[c]) +
                                         ") at t=" + std::to_string(trajectory.times()[i]));
            }
        }
        if (bounded && s[0] + s[1] + s[2] > capacity + bound_tol) {
            throw InvariantViolation("total population exceeds Lambda/mu at t=" +
                                     std::to_string(trajectory.times()[i]));
        }
    }
}

Trajectory simulate_between_host(const BetweenHostParams& p, const BetweenHostState& initial, double horizon,
                                 const IntegratorConfig& config)
{
    p.validate();
    for (double v : initial.as_array()) {
        if (!std::isfinite(v) || v < 0) {
            throw ParameterError("initial", "between-host state must be finite and non-negative");
        }
    }
    if (!(horizon > 0)) {
        throw ParameterError("horizon", "must be positive");
    }
    const auto y0 = initial.as_array();
    auto traj     = integrate(between_host_system(p), y0, 0.0, horizon, config);
    check_well_posed(p, traj);
    return traj;
}

std::vector<double> reconstruct_recovered(const BetweenHostParams& p, const Trajectory& trajectory,
                                          double R0_initial)
{
    std::vector<double> R(trajectory.size());
    if (R.empty()) {
        return R;
    }
    const auto inflow = [&](std::size_t i) {
        return p.gamma1 * trajectory.value(i, 1) + p.gamma2 * trajectory.value(i, 2);
    };
    R[0]          = R0_initial;
    const auto& t = trajectory.times();
    for (std::size_t i = 1; i < R.size(); ++i) {
        const double h = t[i] - t[i - 1];
        R[i] = (R[i - 1] * (1.0 - 0.5 * h * p.mu) + 0.5 * h * (inflow(i - 1) + inflow(i))) / (1.0 + 0.5 * h * p.mu);
    }
    return R;
}

} // namespace nestedepi
