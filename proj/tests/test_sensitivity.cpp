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
#include "nestedepi/error.hpp"
#include "nestedepi/sensitivity.hpp"
#include "random_params.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace
{

using namespace nestedepi;
using F = BetweenHostField;

constexpr double pinned_Nh = 149153.71663015371;

// d ln R0 / d ln p by 50-digit numerical differentiation at the pinned baseline,
// in field order beta, Lambda, pi, mu, gamma1, gamma2, N_h, d.
constexpr std::array<double, 8> ref_elasticity{
    1.0,
    1.0,
    0.55445544554455446,
    -1.3071615109064744,
    -0.24752475247524752,
    -0.00026581279957677725,
    0.00049663063674428692,
    -0.99950336936325571,
};

BetweenHostParams baseline()
{
    return baseline_between_host_params(pinned_Nh);
}

void expect_agreement(const ElasticityReport& cf, const ElasticityReport& fd, const char* where)
{
    for (auto f : all_between_host_fields) {
        ASSERT_TRUE(cf.at(f).has_value());
        if (!fd.at(f)) {
            continue;
        }
        EXPECT_LE(std::abs(*cf.at(f) - *fd.at(f)), 1e-6 * std::abs(*cf.at(f))) << where << " " << field_name(f);
    }
}

TEST(Elasticity, BaselineClosedForm)
{
    const auto cf = elasticity_closed_form(baseline());
    EXPECT_EQ(cf.method, ElasticityMethod::closed_form);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(*cf.values[i], ref_elasticity[i], 1e-13 * std::abs(ref_elasticity[i]))
            << field_name(all_between_host_fields[i]);
    }
    EXPECT_EQ(*cf.at(F::beta), 1.0);
    EXPECT_EQ(*cf.at(F::Lambda), 1.0);
    EXPECT_NEAR(*cf.at(F::d), -0.99, 0.02);
}

TEST(Elasticity, BaselineSignPattern)
{
    const auto cf = elasticity_closed_form(baseline());
    for (auto f : {F::beta, F::Lambda, F::pi, F::N_h}) {
        EXPECT_GT(*cf.at(f), 0.0) << field_name(f);
    }
    for (auto f : {F::mu, F::gamma1, F::gamma2, F::d}) {
        EXPECT_LT(*cf.at(f), 0.0) << field_name(f);
    }
}

TEST(Elasticity, ProgressionIndexIsNotConstant)
{
    // pi appears in the numerator and in mu + pi + gamma1, so its index is
    // (mu + gamma1) / (mu + pi + gamma1), not 1.
    const auto p  = baseline();
    const auto cf = elasticity_closed_form(p);
    EXPECT_DOUBLE_EQ(*cf.at(F::pi), (p.mu + p.gamma1) / (p.mu + p.pi + p.gamma1));
}

TEST(Elasticity, DeathIndexApproachesMinusOne)
{
    auto p = baseline();
    p.N_h  = 1e12;
    EXPECT_NEAR(*elasticity_closed_form(p).at(F::d), -1.0, 1e-9);
}

TEST(Elasticity, FiniteDifferenceBaseline)
{
    const auto fd = elasticity_finite_difference(baseline());
    EXPECT_EQ(fd.method, ElasticityMethod::finite_difference);
    EXPECT_NEAR(*fd.at(F::beta), 1.0, 1e-9);
    expect_agreement(elasticity_closed_form(baseline()), fd, "baseline");
}

TEST(Elasticity, FiniteDifferenceRandomDraws)
{
    std::mt19937_64 rng(31);
    for (int n = 0; n < 100; ++n) {
        const auto p = test_support::draw_params(rng);
        expect_agreement(elasticity_closed_form(p), elasticity_finite_difference(p), "draw");
    }
}

TEST(Elasticity, RichardsonSanity)
{
    const auto p        = baseline();
    const double exact  = *elasticity_closed_form(p).at(F::mu);
    const double coarse = *elasticity_finite_difference(p, 1e-2).at(F::mu);
    const double finer  = *elasticity_finite_difference(p, 5e-3).at(F::mu);
    EXPECT_LT(std::abs(finer - exact), std::abs(coarse - exact));
    EXPECT_LT(std::abs(finer - coarse), std::abs(coarse - exact) * 1.01);
}

TEST(Elasticity, LocalAtRescaledPoint)
{
    std::mt19937_64 rng(37);
    for (int n = 0; n < 20; ++n) {
        auto p = test_support::draw_params(rng);
        for (auto f : all_between_host_fields) {
            auto q = p;
            set(q, f, 3.0 * get(p, f));
            expect_agreement(elasticity_closed_form(q), elasticity_finite_difference(q), "rescaled");
        }
    }
}

TEST(Elasticity, ZeroParameterIsNotApplicable)
{
    auto p   = baseline();
    p.gamma1 = 0.0;
    const auto fd = elasticity_finite_difference(p);
    EXPECT_FALSE(fd.at(F::gamma1).has_value());
    EXPECT_TRUE(fd.at(F::beta).has_value());
    EXPECT_EQ(*elasticity_closed_form(p).at(F::gamma1), 0.0);
}

TEST(Elasticity, Errors)
{
    auto p = baseline();
    p.beta = 0.0;
    EXPECT_THROW(elasticity_closed_form(p), ParameterError);
    EXPECT_THROW(elasticity_finite_difference(baseline(), 0.0), ParameterError);
    EXPECT_THROW(elasticity_finite_difference(baseline(), 0.02), ParameterError);
}

} // namespace
