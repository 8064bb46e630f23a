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
#ifndef NESTEDEPI_INTEGRATOR_HPP
#define NESTEDEPI_INTEGRATOR_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace nestedepi
{

/**
 * Autonomous or time-dependent first order system dy/dt = f(t, y).
 * The right-hand side writes f(t, y) into its third argument, which has
 * the same length as y.
 */
struct OdeSystem {
    using Rhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

    std::size_t dimension = 0;
    Rhs rhs;
    /// The exact solution stays in the non-negative orthant. The adaptive
    /// method then rejects steps that undershoot zero by more than abs_tol / 10.
    bool non_negative = false;
};

enum class Method
{
    fixed_rk4,
    adaptive_rk45,
};

struct IntegratorConfig {
    Method method = Method::adaptive_rk45;
    /// Step size for fixed_rk4, initial step for adaptive_rk45.
    double step = 1e-3;
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    std::int64_t max_steps = 10'000'000;
    /// Upper bound on adaptive steps. Infinity leaves the controller unconstrained.
    double max_step = std::numeric_limits<double>::infinity();

    void validate() const;
    bool operator==(const IntegratorConfig&) const = default;
};

struct StepStats {
    std::int64_t accepted = 0;
    std::int64_t rejected = 0;
    std::int64_t rhs_evaluations = 0;
};

/**
 * Accepted states of an integration, one row per stored time.
 * States are stored row-major in a single buffer.
 */
class Trajectory
{
public:
    Trajectory() = default;
    explicit Trajectory(std::size_t dimension);

    void push_back(double t, std::span<const double> state);

    std::size_t size() const noexcept
    {
        return m_times.size();
    }
    std::size_t dimension() const noexcept
    {
        return m_dimension;
    }
    const std::vector<double>& times() const noexcept
    {
        return m_times;
    }
    std::span<const double> state(std::size_t i) const;
    double value(std::size_t i, std::size_t component) const
    {
        return m_states[i * m_dimension + component];
    }
    /// All stored values of one component.
    std::vector<double> component(std::size_t c) const;

    double t0() const
    {
        return m_times.front();
    }
    double t_end() const
    {
        return m_times.back();
    }
    std::span<const double> back() const
    {
        return state(size() - 1);
    }

    StepStats stats;

private:
    std::size_t m_dimension = 0;
    std::vector<double> m_times;
    std::vector<double> m_states;
};

/**
 * Integrate system from t0 to t_end.
 * Throws IntegrationBudgetError when max_steps is exhausted and
 * DivergenceError when the right-hand side returns non-finite values.
 */
Trajectory integrate(const OdeSystem& system, std::span<const double> initial, double t0, double t_end,
                     const IntegratorConfig& config = {});

/// Linear interpolation of the stored states, one row per query time.
std::vector<std::vector<double>> sample(const Trajectory& trajectory, std::span<const double> query_times);

} // namespace nestedepi

#endif // NESTEDEPI_INTEGRATOR_HPP
