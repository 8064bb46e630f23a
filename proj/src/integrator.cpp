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
#include "nestedepi/integrator.hpp"
#include "nestedepi/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace nestedepi
{

void IntegratorConfig::validate() const
{
    if (!(step > 0) || !std::isfinite(step)) {
        throw ParameterError("step", "must be positive and finite");
    }
    if (!(abs_tol > 0)) {
        throw ParameterError("abs_tol", "must be positive");
    }
    if (!(rel_tol > 0)) {
        throw ParameterError("rel_tol", "must be positive");
    }
    if (max_steps <= 0) {
        throw ParameterError("max_steps", "must be positive");
    }
    if (!(max_step > 0)) {
        throw ParameterError("max_step", "must be positive");
    }
}

Trajectory::Trajectory(std::size_t dimension)
    : m_dimension(dimension)
{
}

void Trajectory::push_back(double t, std::span<const double> state)
{
    if (state.size() != m_dimension) {
        throw ParameterError("state", "length does not match the trajectory dimension");
    }
    if (!m_times.empty() && !(t > m_times.back())) {
        throw InvariantViolation("trajectory times must be strictly increasing");
    }
    m_times.push_back(t);
    m_states.insert(m_states.end(), state.begin(), state.end());
}

std::span<const double> Trajectory::state(std::size_t i) const
{
    return {m_states.data() + i * m_dimension, m_dimension};
}

std::vector<double> Trajectory::component(std::size_t c) const
{
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out[i] = value(i, c);
    }
    return out;
}

namespace
{

class RhsEvaluator
{
public:
    RhsEvaluator(const OdeSystem& system, StepStats& stats)
        : m_system(system)
        , m_stats(stats)
    {
    }

    void operator()(double t, std::span<const double> y, std::span<double> dydt)
    {
        m_system.rhs(t, y, dydt);
        ++m_stats.rhs_evaluations;
        for (double v : dydt) {
            if (!std::isfinite(v)) {
                throw DivergenceError(t, "non-finite derivative");
            }
        }
    }

private:
    const OdeSystem& m_system;
    StepStats& m_stats;
};

using Vec = std::vector<double>;

void axpy_stage(Vec& out, const Vec& y, double h, std::initializer_list<std::pair<double, const Vec*>> terms)
{
    for (std::size_t i = 0; i < y.size(); ++i) {
        double acc = 0.0;
        for (const auto& [a, k] : terms) {
            acc += a * (*k)[i];
        }
        out[i] = y[i] + h * acc;
    }
}

Trajectory integrate_rk4(const OdeSystem& system, std::span<const double> initial, double t0, double t_end,
                         const IntegratorConfig& config)
{
    const std::size_t n = system.dimension;
    Trajectory traj(n);
    RhsEvaluator f(system, traj.stats);

    const double span   = t_end - t0;
    const auto n_steps  = static_cast<std::int64_t>(std::ceil(span / config.step * (1.0 - 1e-12)));
    if (n_steps > config.max_steps) {
        throw IntegrationBudgetError("fixed step integration needs " + std::to_string(n_steps) +
                                     " steps, budget is " + std::to_string(config.max_steps));
    }

    Vec y(initial.begin(), initial.end()), k1(n), k2(n), k3(n), k4(n), tmp(n);
    traj.push_back(t0, y);
    double t = t0;
    for (std::int64_t i = 1; i <= n_steps; ++i) {
        const double t_next = (i == n_steps) ? t_end : t0 + static_cast<double>(i) * config.step;
        const double h      = t_next - t;
        f(t, y, k1);
        axpy_stage(tmp, y, 0.5 * h, {{1.0, &k1}});
        f(t + 0.5 * h, tmp, k2);
        axpy_stage(tmp, y, 0.5 * h, {{1.0, &k2}});
        f(t + 0.5 * h, tmp, k3);
        axpy_stage(tmp, y, h, {{1.0, &k3}});
        f(t_next, tmp, k4);
        for (std::size_t j = 0; j < n; ++j) {
            y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
        t = t_next;
        traj.push_back(t, y);
        ++traj.stats.accepted;
    }
    return traj;
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0,
                 b6 = 11.0 / 84.0;
// b - b_hat, the embedded 4th order error weights.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

Trajectory integrate_dopri5(const OdeSystem& system, std::span<const double> initial, double t0, double t_end,
                            const IntegratorConfig& config)
{
    const std::size_t n = system.dimension;
    Trajectory traj(n);
    RhsEvaluator f(system, traj.stats);

    constexpr double safety = 0.9, fac_min = 0.2, fac_max = 5.0;

    Vec y(initial.begin(), initial.end()), y_new(n), tmp(n);
    Vec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    traj.push_back(t0, y);

    double t = t0;
    double h = std::min({config.step, config.max_step, t_end - t0});
    f(t, y, k1);

    std::int64_t attempts = 0;
    while (t < t_end) {
        if (++attempts > config.max_steps) {
            throw IntegrationBudgetError("step budget of " + std::to_string(config.max_steps) +
                                         " exhausted at t=" + std::to_string(t));
        }
        bool last = false;
        if (t + h >= t_end || (t_end - (t + h)) < 1e-12 * std::abs(t_end)) {
            h    = t_end - t;
            last = true;
        }
        if (h <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
            throw DivergenceError(t, "step size underflow");
        }

        axpy_stage(tmp, y, h, {{a21, &k1}});
        f(t + c2 * h, tmp, k2);
        axpy_stage(tmp, y, h, {{a31, &k1}, {a32, &k2}});
        f(t + c3 * h, tmp, k3);
        axpy_stage(tmp, y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
        f(t + c4 * h, tmp, k4);
        axpy_stage(tmp, y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
        f(t + c5 * h, tmp, k5);
        axpy_stage(tmp, y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
        f(t + h, tmp, k6);
        axpy_stage(y_new, y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        f(t + h, y_new, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double scale = config.abs_tol + config.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            err = std::max(err, std::abs(e) / scale);
            if (system.non_negative && y_new[i] < 0.0) {
                err = std::max(err, -y_new[i] / (0.1 * config.abs_tol));
            }
        }

        if (!std::isfinite(err)) {
            h *= fac_min;
            ++traj.stats.rejected;
            continue;
        }

        const double factor = err == 0.0 ? fac_max : std::clamp(safety * std::pow(err, -0.2), fac_min, fac_max);
        if (err <= 1.0) {
            t = last ? t_end : t + h;
            y.swap(y_new);
            k1.swap(k7);
            traj.push_back(t, y);
            ++traj.stats.accepted;
            h = std::min(h * factor, config.max_step);
        }
        else {
            h *= std::min(1.0, factor);
            ++traj.stats.rejected;
        }
    }
    return traj;
}

} // namespace

Trajectory integrate(const OdeSystem& system, std::span<const double> initial, double t0, double t_end,
                     const IntegratorConfig& config)
{
    config.validate();
    if (!(t_end > t0)) {
        throw ParameterError("t_end", "must exceed t0");
    }
    if (initial.size() != system.dimension) {
        throw ParameterError("initial", "length " + std::to_string(initial.size()) + " does not match dimension " +
                                            std::to_string(system.dimension));
    }
    for (double v : initial) {
        if (!std::isfinite(v)) {
            throw ParameterError("initial", "components must be finite");
        }
    }
    switch (config.method) {
    case Method::fixed_rk4:
        return integrate_rk4(system, initial, t0, t_end, config);
    case Method::adaptive_rk45:
        return integrate_dopri5(system, initial, t0, t_end, config);
    }
    throw ParameterError("method", "unknown integration method");
}

std::vector<std::vector<double>> sample(const Trajectory& trajectory, std::span<const double> query_times)
{
    const auto& times = trajectory.times();
    if (times.empty()) {
        throw ParameterError("trajectory", "is empty");
    }
    std::vector<std::vector<double>> out;
    out.reserve(query_times.size());
    for (double q : query_times) {
        if (!(q >= times.front() && q <= times.back())) {
            throw ParameterError("query_times", "time " + std::to_string(q) + " outside trajectory span");
        }
        // First stored time >= q.
        const auto it = std::lower_bound(times.begin(), times.end(), q);
        const auto hi = static_cast<std::size_t>(it - times.begin());
        if (times[hi] == q || hi == 0) {
            auto s = trajectory.state(hi);
            out.emplace_back(s.begin(), s.end());
            continue;
        }
        const std::size_t lo = hi - 1;
        const double w       = (q - times[lo]) / (times[hi] - times[lo]);
        std::vector<double> row(trajectory.dimension());
        for (std::size_t c = 0; c < row.size(); ++c) {
            row[c] = (1.0 - w) * trajectory.value(lo, c) + w * trajectory.value(hi, c);
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace nestedepi
