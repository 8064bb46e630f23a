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
#include "nestedepi/analysis.hpp"
#include "nestedepi/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace nestedepi
{

std::string_view to_string(Stability s)
{
    switch (s) {
    case Stability::stable:
        return "stable";
    case Stability::unstable:
        return "unstable";
    case Stability::not_applicable:
        return "not_applicable";
    }
    return "?";
}

namespace
{

struct Rates {
    double K1; // mu + pi + gamma1, total exit rate from E
    double K2; // mu + gamma2 + d N_h, total exit rate from I
};

Rates exit_rates(const BetweenHostParams& p)
{
    return {p.mu + p.pi + p.gamma1, p.mu + p.gamma2 + p.d * p.N_h};
}

} // namespace

double compute_R0(const BetweenHostParams& p)
{
    p.validate();
    const auto [K1, K2]      = exit_rates(p);
    const double denominator = p.mu * K1 * K2;
    if (!(denominator > 0) || !std::isfinite(denominator)) {
        throw ParameterError("mu", "R0 denominator mu (mu + pi + gamma1)(mu + gamma2 + d N_h) is not positive");
    }
    return detail::reproduction_number(p.beta, p.Lambda, p.pi, p.mu, p.gamma1, p.gamma2, p.d, p.N_h);
}

Equilibria equilibria(const BetweenHostParams& p)
{
    const double R0 = compute_R0(p);
    Equilibria eq;
    eq.E0 = {p.Lambda / p.mu, 0.0, 0.0};
    if (R0 > 1.0) {
        const double force  = p.beta * p.N_h;
        const double I_star = p.mu * (R0 - 1.0) / force;
        const double S_star = p.Lambda / (force * I_star + p.mu);
        const double E_star = exit_rates(p).K2 * I_star / p.pi;
        eq.E1               = BetweenHostState{S_star, E_star, I_star};
    }
    return eq;
}

Eigen::Matrix3d jacobian(const BetweenHostParams& p, const BetweenHostState& at)
{
    const double force  = p.beta * p.N_h;
    const auto [K1, K2] = exit_rates(p);
    Eigen::Matrix3d J;
    // clang-format off
    J << -(force * at.I + p.mu), 0.0,  -force * at.S,
          force * at.I,          -K1,   force * at.S,
          0.0,                   p.pi, -K2;
    // clang-format on
    return J;
}

std::array<double, 3> characteristic_coefficients(const Eigen::Matrix3d& J)
{
    const double trace  = J.trace();
    const double minors = J(0, 0) * J(1, 1) - J(0, 1) * J(1, 0) + J(0, 0) * J(2, 2) - J(0, 2) * J(2, 0) +
                          J(1, 1) * J(2, 2) - J(1, 2) * J(2, 1);
    return {-trace, minors, -J.determinant()};
}

CubicRoots eigenvalues_cubic(double a3, double a2, double a1, double a0)
{
    if (a3 == 0.0 || !std::isfinite(a3)) {
        throw ParameterError("a3", "leading coefficient must be non-zero: not a cubic");
    }
    const double c2 = a2 / a3, c1 = a1 / a3, c0 = a0 / a3;
    Eigen::Matrix3d companion;
    // clang-format off
    companion << -c2, -c1, -c0,
                 1.0, 0.0, 0.0,
                 0.0, 1.0, 0.0;
    // clang-format on
    Eigen::EigenSolver<Eigen::Matrix3d> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("companion matrix eigenvalue iteration did not converge");
    }

    const auto poly = [&](std::complex<double> z) {
        return ((z + c2) * z + c1) * z + c0;
    };
    const auto dpoly = [&](std::complex<double> z) {
        return (3.0 * z + 2.0 * c2) * z + c1;
    };

    CubicRoots roots;
    for (int i = 0; i < 3; ++i) {
        std::complex<double> z = solver.eigenvalues()[i];
        for (int iter = 0; iter < 3; ++iter) {
            const auto dp = dpoly(z);
            if (std::abs(dp) == 0.0) {
                break;
            }
            const auto candidate = z - poly(z) / dp;
            if (!(std::abs(poly(candidate)) < std::abs(poly(z)))) {
                break;
            }
            z = candidate;
        }
        roots[static_cast<std::size_t>(i)] = z;
    }
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

double max_real_part(const CubicRoots& roots)
{
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& r : roots) {
        m = std::max(m, r.real());
    }
    return m;
}

RouthHurwitzCoefficients rh_coefficients(const BetweenHostParams& p)
{
    const double R0     = compute_R0(p);
    const auto [K1, K2] = exit_rates(p);
    const double force  = p.beta * p.N_h;
    RouthHurwitzCoefficients c;
    if (force > 0.0 && p.pi > 0.0 && p.Lambda > 0.0) {
        const double I_star = p.mu * (R0 - 1.0) / force;
        const double S_star = p.Lambda / (force * I_star + p.mu);
        const double uptake = force * I_star + p.mu; // mu + beta N_h I*
        c.A1 = 3.0 * p.mu + p.pi + force * I_star + p.gamma1 + p.gamma2 + p.d * p.N_h;
        c.B1 = uptake * (2.0 * p.mu + p.pi + p.gamma1 + p.gamma2 + p.d * p.N_h) + K1 * K2 - force * p.pi * S_star;
        c.C1 = uptake * (K1 * K2 - force * p.pi * S_star) + force * force * S_star * I_star * p.pi;
    }
    else {
        // No transmission or no progression: the branch is degenerate, use the
        // reduced forms A1 = K1 + K2 + mu R0, B1 = mu R0 (K1 + K2).
        c.A1 = K1 + K2 + p.mu * R0;
        c.B1 = p.mu * R0 * (K1 + K2);
        c.C1 = p.mu * K1 * K2 * (R0 - 1.0);
    }
    return c;
}

StabilityReport routh_hurwitz(const BetweenHostParams& p)
{
    StabilityReport r;
    r.R0           = compute_R0(p);
    const auto eq  = equilibria(p);
    r.E0           = eq.E0;
    r.E1           = eq.E1;
    r.rh           = rh_coefficients(p);
    r.rh_margin    = r.rh.A1 * r.rh.B1 - r.rh.C1;

    const auto c0       = characteristic_coefficients(jacobian(p, r.E0));
    r.eigenvalues_E0    = eigenvalues_cubic(1.0, c0[0], c0[1], c0[2]);
    r.classification_E0 = r.R0 < 1.0 ? Stability::stable : Stability::unstable;

    const double C1_sign = (r.rh.C1 > 0) - (r.rh.C1 < 0);
    const double R0_sign = (r.R0 > 1.0) - (r.R0 < 1.0);
    r.threshold_consistent = C1_sign == R0_sign;

    if (r.E1) {
        const auto c1    = characteristic_coefficients(jacobian(p, *r.E1));
        r.eigenvalues_E1 = eigenvalues_cubic(1.0, c1[0], c1[1], c1[2]);
        const std::array<double, 3> rh{r.rh.A1, r.rh.B1, r.rh.C1};
        r.coefficient_mismatch = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            const double scale     = std::max(std::abs(rh[i]), std::numeric_limits<double>::min());
            r.coefficient_mismatch = std::max(r.coefficient_mismatch, std::abs(c1[i] - rh[i]) / scale);
        }
        const bool rh_stable = r.rh.A1 > 0 && r.rh.C1 > 0 && r.rh_margin > 0;
        r.classification_E1  = rh_stable ? Stability::stable : Stability::unstable;
    }
    else {
        r.coefficient_mismatch = std::numeric_limits<double>::quiet_NaN();
        r.classification_E1    = Stability::not_applicable;
    }
    return r;
}

BifurcationQuantities bifurcation_quantities(const BetweenHostParams& p)
{
    p.validate();
    if (!(p.N_h > 0)) {
        throw ParameterError("N_h", "no transmission: N_h must be positive for a threshold to exist");
    }
    if (!(p.pi > 0) || !(p.Lambda > 0)) {
        throw ParameterError(p.pi > 0 ? "Lambda" : "pi", "must be positive for a finite critical beta");
    }
    const auto [K1, K2] = exit_rates(p);
    BifurcationQuantities q;
    q.beta_star = p.mu * K1 * K2 / (p.N_h * p.pi * p.Lambda);
    q.a_coeff   = -2.0 * q.beta_star * q.beta_star * p.N_h * p.N_h * p.Lambda;
    q.b_coeff   = p.N_h * p.Lambda;
    return q;
}

} // namespace nestedepi
