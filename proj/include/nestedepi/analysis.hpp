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
#ifndef NESTEDEPI_ANALYSIS_HPP
#define NESTEDEPI_ANALYSIS_HPP

#include "nestedepi/between_host.hpp"

#include <Eigen/Core>

#include <array>
#include <complex>
#include <optional>

namespace nestedepi
{

enum class Stability
{
    stable,
    unstable,
    not_applicable,
};

std::string_view to_string(Stability s);

using CubicRoots = std::array<std::complex<double>, 3>;

struct Equilibria {
    BetweenHostState E0;
    std::optional<BetweenHostState> E1; ///< present iff R0 > 1
};

/// Coefficients of lambda^3 + A1 lambda^2 + B1 lambda + C1 at the endemic branch.
struct RouthHurwitzCoefficients {
    double A1 = 0.0;
    double B1 = 0.0;
    double C1 = 0.0;
};

struct StabilityReport {
    double R0 = 0.0;
    BetweenHostState E0;
    std::optional<BetweenHostState> E1;
    CubicRoots eigenvalues_E0{};
    std::optional<CubicRoots> eigenvalues_E1;
    RouthHurwitzCoefficients rh;
    double rh_margin = 0.0; ///< A1 B1 - C1
    Stability classification_E0 = Stability::not_applicable;
    Stability classification_E1 = Stability::not_applicable;
    /// Largest relative difference between rh and the characteristic
    /// polynomial of the numerically assembled Jacobian at E1; NaN without E1.
    double coefficient_mismatch = 0.0;
    /// sign(C1) == sign(R0 - 1)
    bool threshold_consistent = false;
};

struct BifurcationQuantities {
    double beta_star = 0.0; ///< transmission coefficient at which R0 = 1
    double a_coeff   = 0.0;
    double b_coeff   = 0.0;

    /// a < 0 and b > 0: the stability exchange at R0 = 1 is forward.
    bool forward() const
    {
        return a_coeff < 0.0 && b_coeff > 0.0;
    }
};

/// Real-part deadband used when classifying eigenvalues.
inline constexpr double stability_deadband = 1e-9;

namespace detail
{

/// R0 = beta N_h pi Lambda / (mu (mu + pi + gamma1)(mu + gamma2 + d N_h)), in any floating type.
template <class T>
T reproduction_number(T beta, T Lambda, T pi, T mu, T gamma1, T gamma2, T d, T N_h)
{
    return beta * N_h * pi * Lambda / (mu * (mu + pi + gamma1) * (mu + gamma2 + d * N_h));
}

} // namespace detail

double compute_R0(const BetweenHostParams& p);

Equilibria equilibria(const BetweenHostParams& p);

/// Analytic Jacobian of the SEI right-hand side at a state.
Eigen::Matrix3d jacobian(const BetweenHostParams& p, const BetweenHostState& at);

/// (c2, c1, c0) with det(lambda I - J) = lambda^3 + c2 lambda^2 + c1 lambda + c0.
std::array<double, 3> characteristic_coefficients(const Eigen::Matrix3d& J);

/**
 * Roots of a3 x^3 + a2 x^2 + a1 x + a0 from the eigenvalues of the companion
 * matrix, refined by Newton steps and ordered by (real, imaginary) part.
 */
CubicRoots eigenvalues_cubic(double a3, double a2, double a1, double a0);

double max_real_part(const CubicRoots& roots);

/// A1, B1, C1 evaluated on the algebraic endemic branch (negative I* when R0 < 1).
RouthHurwitzCoefficients rh_coefficients(const BetweenHostParams& p);

StabilityReport routh_hurwitz(const BetweenHostParams& p);

BifurcationQuantities bifurcation_quantities(const BetweenHostParams& p);

} // namespace nestedepi

#endif // NESTEDEPI_ANALYSIS_HPP
