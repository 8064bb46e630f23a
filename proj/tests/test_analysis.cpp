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
#include "random_params.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

namespace
{

using namespace nestedepi;

constexpr double pinned_Nh = 149153.71663015371;

// 40-digit reference evaluation at the pinned N_h.
constexpr double ref_R0        = 3271.8891237200636;
constexpr double ref_E1[3]     = {0.35147890301749472, 352.86241736640057, 0.11822942902385566};
constexpr double ref_eig_E1[3] = {-269.425602861899, -202.041472950966, -0.202139792055905};
constexpr double ref_eig_E0[3] = {-576.606154538113, -0.062, 307.794064603836};
constexpr double ref_A1        = 471.66921560492062;
constexpr double ref_B1        = 54530.447909586005;
constexpr double ref_C1        = 11003.509022814171;
constexpr double ref_beta_star = 3.5147890301749472e-6;
constexpr double ref_a         = -39.190987748548044;
constexpr double ref_b         = 10634659.99572996;

BetweenHostParams baseline()
{
    return baseline_between_host_params(pinned_Nh);
}

std::complex<double> eval_cubic(double a3, double a2, double a1, double a0, std::complex<double> z)
{
    return ((a3 * z + a2) * z + a1) * z + a0;
}

TEST(ComputeR0, Baseline)
{
    EXPECT_NEAR(compute_R0(baseline()), ref_R0, 1e-12 * ref_R0);
}

TEST(ComputeR0, VanishesWithoutTransmissionOrProgression)
{
    auto p = baseline();
    p.beta = 0.0;
    EXPECT_EQ(compute_R0(p), 0.0);
    p    = baseline();
    p.pi = 0.0;
    EXPECT_EQ(compute_R0(p), 0.0);
}

TEST(ComputeR0, RejectsInvalidParams)
{
    auto p = baseline();
    p.mu   = 0.0;
    EXPECT_THROW(compute_R0(p), ParameterError);
}

TEST(Equilibria, Baseline)
{
    const auto eq = equilibria(baseline());
    EXPECT_NEAR(eq.E0.S, 1150.0, 1e-9);
    EXPECT_EQ(eq.E0.E, 0.0);
    EXPECT_EQ(eq.E0.I, 0.0);
    ASSERT_TRUE(eq.E1.has_value());
    const auto e1 = eq.E1->as_array();
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(e1[i], ref_E1[i], 1e-12 * ref_E1[i]);
    }
    const auto r = between_host_rhs(baseline(), *eq.E1);
    EXPECT_LT(std::hypot(r[0], r[1], r[2]), 1e-9);
}

TEST(Equilibria, AbsentAtAndBelowThreshold)
{
    auto p = baseline();
    p.beta = bifurcation_quantities(p).beta_star;
    EXPECT_FALSE(equilibria(p).E1.has_value());
    p.beta *= 0.5;
    EXPECT_FALSE(equilibria(p).E1.has_value());
}

TEST(Jacobian, DiseaseFreeEntries)
{
    const auto p = baseline();
    const auto J = jacobian(p, equilibria(p).E0);
    EXPECT_EQ(J(0, 0), -p.mu);
    EXPECT_EQ(J(2, 1), p.pi);
    EXPECT_NEAR(J(0, 2), -p.beta * p.N_h * p.Lambda / p.mu, 1e-9);
}

TEST(Jacobian, InfectionTermsVanishAtEmptyState)
{
    const auto J = jacobian(baseline(), {0, 5, 0});
    EXPECT_EQ(J(0, 2), 0.0);
    EXPECT_EQ(J(1, 2), 0.0);
    EXPECT_EQ(J(1, 0), 0.0);
    EXPECT_EQ(J(0, 0), -baseline().mu);
}

TEST(Jacobian, MatchesFiniteDifferences)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> state(0.0, 1000.0);
    for (int n = 0; n < 100; ++n) {
        const auto p = test_support::draw_params(rng);
        const BetweenHostState at{state(rng), state(rng), state(rng)};
        const auto J = jacobian(p, at);
        const double scale = J.cwiseAbs().maxCoeff();
        for (int c = 0; c < 3; ++c) {
            auto up   = at.as_array();
            auto down = at.as_array();
            // The field is affine in each single variable, so a wide step
            // carries no truncation error and keeps cancellation small.
            const double h = std::max(std::abs(up[c]), 1.0);
            up[c] += h;
            down[c] -= h;
            const auto fu = between_host_rhs(p, {up[0], up[1], up[2]});
            const auto fd = between_host_rhs(p, {down[0], down[1], down[2]});
            for (int r = 0; r < 3; ++r) {
                const double numeric = (fu[r] - fd[r]) / (2 * h);
                EXPECT_LE(std::abs(numeric - J(r, c)), 1e-6 * std::max(std::abs(J(r, c)), 1e-6 * scale))
                    << "draw " << n << " entry " << r << c;
            }
        }
    }
}

TEST(EigenvaluesCubic, ConstructedFactorization)
{
    const auto roots = eigenvalues_cubic(1, -6, 11, -6);
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(roots[i].real(), i + 1.0, 1e-12);
        EXPECT_NEAR(roots[i].imag(), 0.0, 1e-12);
    }
}

TEST(EigenvaluesCubic, PureImaginaryPair)
{
    const auto roots = eigenvalues_cubic(1, 0, 1, 0);
    EXPECT_NEAR(std::abs(roots[0] - std::complex<double>(0, -1)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(roots[1] - std::complex<double>(0, 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(roots[2] - std::complex<double>(0, 1)), 0.0, 1e-12);
}

TEST(EigenvaluesCubic, RandomResiduals)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coef(-10.0, 10.0);
    for (int n = 0; n < 500; ++n) {
        const double a3 = coef(rng) + (n % 2 ? 20.0 : -20.0);
        const double a2 = coef(rng);
        const double a1 = coef(rng);
        const double a0 = coef(rng);
        const double big = std::max({std::abs(a3), std::abs(a2), std::abs(a1), std::abs(a0)});
        const auto roots = eigenvalues_cubic(a3, a2, a1, a0);
        for (const auto& z : roots) {
            EXPECT_LT(std::abs(eval_cubic(a3, a2, a1, a0, z)), 1e-8 * big);
        }
        for (int i = 1; i < 3; ++i) {
            const bool ordered = roots[i - 1].real() < roots[i].real() ||
                                 (roots[i - 1].real() == roots[i].real() && roots[i - 1].imag() <= roots[i].imag());
            EXPECT_TRUE(ordered);
        }
    }
}

TEST(EigenvaluesCubic, DegreeError)
{
    EXPECT_THROW(eigenvalues_cubic(0, 1, 2, 3), ParameterError);
}

TEST(RouthHurwitz, BaselineEndemicStable)
{
    const auto r = routh_hurwitz(baseline());
    EXPECT_NEAR(r.R0, ref_R0, 1e-12 * ref_R0);
    EXPECT_EQ(r.classification_E0, Stability::unstable);
    EXPECT_EQ(r.classification_E1, Stability::stable);
    ASSERT_TRUE(r.eigenvalues_E1.has_value());
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR((*r.eigenvalues_E1)[i].real(), ref_eig_E1[i], 1e-9 * std::abs(ref_eig_E1[i]));
        EXPECT_LT((*r.eigenvalues_E1)[i].real(), 0.0);
        EXPECT_NEAR(r.eigenvalues_E0[i].real(), ref_eig_E0[i], 1e-9 * std::abs(ref_eig_E0[i]));
    }
    EXPECT_NEAR(r.rh.A1, ref_A1, 1e-12 * ref_A1);
    EXPECT_NEAR(r.rh.B1, ref_B1, 1e-12 * ref_B1);
    EXPECT_NEAR(r.rh.C1, ref_C1, 1e-9 * ref_C1);
    EXPECT_NEAR(r.rh_margin, r.rh.A1 * r.rh.B1 - r.rh.C1, 1e-12 * r.rh_margin);
    EXPECT_LT(r.coefficient_mismatch, 1e-6);
    EXPECT_TRUE(r.threshold_consistent);
}

TEST(RouthHurwitz, SubcriticalHasNoEndemicClassification)
{
    auto p = baseline();
    p.beta = 0.5 * bifurcation_quantities(p).beta_star;
    const auto r = routh_hurwitz(p);
    EXPECT_LT(r.rh.C1, 0.0);
    EXPECT_EQ(r.classification_E0, Stability::stable);
    EXPECT_EQ(r.classification_E1, Stability::not_applicable);
    EXPECT_FALSE(r.E1.has_value());
    EXPECT_FALSE(r.eigenvalues_E1.has_value());
    EXPECT_TRUE(std::isnan(r.coefficient_mismatch));
    EXPECT_TRUE(r.threshold_consistent);
}

TEST(RouthHurwitz, SimplifiedCoefficientForms)
{
    std::mt19937_64 rng(17);
    for (int n = 0; n < 500; ++n) {
        const auto p   = test_support::draw_params(rng);
        const double R0 = compute_R0(p);
        const double K1 = p.mu + p.pi + p.gamma1;
        const double K2 = p.mu + p.gamma2 + p.d * p.N_h;
        const auto rh   = rh_coefficients(p);
        EXPECT_NEAR(rh.A1, K1 + K2 + p.mu * R0, 1e-10 * rh.A1);
        EXPECT_NEAR(rh.B1, p.mu * R0 * (K1 + K2), 1e-9 * std::abs(rh.B1));
        const double C1 = p.mu * K1 * K2 * (R0 - 1.0);
        EXPECT_NEAR(rh.C1, C1, 1e-8 * p.mu * K1 * K2 * R0);
    }
}

TEST(RouthHurwitz, ClassificationMatchesEigenvalues)
{
    std::mt19937_64 rng(23);
    int endemic = 0;
    for (int n = 0; n < 1000; ++n) {
        const auto p = test_support::draw_params(rng);
        const auto r = routh_hurwitz(p);
        if (std::abs(r.R0 - 1.0) <= 0.01) {
            continue;
        }
        EXPECT_TRUE(r.threshold_consistent);
        EXPECT_EQ(r.rh.C1 > 0, r.R0 > 1);
        EXPECT_EQ(max_real_part(r.eigenvalues_E0) < -stability_deadband, r.R0 < 1) << "draw " << n;
        EXPECT_EQ(r.classification_E0 == Stability::stable, r.R0 < 1);
        if (r.E1) {
            ++endemic;
            EXPECT_LT(r.coefficient_mismatch, 1e-6) << "draw " << n;
            const bool stable = max_real_part(*r.eigenvalues_E1) < -stability_deadband;
            EXPECT_EQ(r.classification_E1 == Stability::stable, stable) << "draw " << n;
        }
    }
    EXPECT_GT(endemic, 100);
}

TEST(Bifurcation, Baseline)
{
    const auto q = bifurcation_quantities(baseline());
    EXPECT_NEAR(q.beta_star, ref_beta_star, 1e-12 * ref_beta_star);
    EXPECT_NEAR(q.a_coeff, ref_a, 1e-12 * std::abs(ref_a));
    EXPECT_NEAR(q.b_coeff, ref_b, 1e-12 * ref_b);
    EXPECT_TRUE(q.forward());
}

TEST(Bifurcation, ThresholdAndBisection)
{
    std::mt19937_64 rng(29);
    for (int n = 0; n < 100; ++n) {
        auto p       = test_support::draw_params(rng);
        const auto q = bifurcation_quantities(p);
        EXPECT_TRUE(q.forward());
        auto at  = p;
        at.beta  = q.beta_star;
        EXPECT_NEAR(compute_R0(at), 1.0, 1e-12);

        double lo = 0.0;
        double hi = 1.0;
        for (at.beta = hi; compute_R0(at) < 1.0; at.beta = hi) {
            hi *= 2.0;
        }
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            at.beta          = mid;
            (compute_R0(at) < 1.0 ? lo : hi) = mid;
        }
        EXPECT_NEAR(q.beta_star, 0.5 * (lo + hi), 1e-10 * q.beta_star);
    }
}

TEST(Bifurcation, DoublingLambdaDoublesB)
{
    auto p        = baseline();
    const double b = bifurcation_quantities(p).b_coeff;
    p.Lambda *= 2.0;
    EXPECT_EQ(bifurcation_quantities(p).b_coeff, 2.0 * b);
}

TEST(Bifurcation, RequiresTransmission)
{
    auto p = baseline();
    p.N_h  = 0.0;
    EXPECT_THROW(bifurcation_quantities(p), ParameterError);
}

} // namespace
