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
// Acceptance gate. Usage: nestedepi_acceptance [criterion...]
// Runs the named criteria (1-10), or all of them, printing one PASS/FAIL
// line each. Exits non-zero if any criterion fails.

#include "nestedepi/analysis.hpp"
#include "nestedepi/coupling.hpp"
#include "nestedepi/interventions.hpp"
#include "nestedepi/runner.hpp"
#include "nestedepi/sensitivity.hpp"
#include "nestedepi/sweeps.hpp"

#include "../random_params.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace
{

using namespace nestedepi;
namespace fs = std::filesystem;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string fmt(const char* format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

BetweenHostParams coupled_baseline()
{
    return baseline_between_host_params(compute_Nh(baseline_within_host_params()).N_h);
}

Outcome integrator_order()
{
    const OdeSystem decay{1, [](double, std::span<const double> y, std::span<double> dy) {
                              dy[0] = -y[0];
                          }};
    std::vector<double> err;
    for (double h : {0.1, 0.05, 0.025}) {
        IntegratorConfig c;
        c.method = Method::fixed_rk4;
        c.step   = h;
        err.push_back(std::abs(integrate(decay, std::vector<double>{1.0}, 0.0, 1.0, c).back()[0] - std::exp(-1.0)));
    }
    const double r1 = err[0] / err[1];
    const double r2 = err[1] / err[2];
    const bool ok   = r1 >= 14 && r1 <= 18 && r2 >= 14 && r2 <= 18;
    return {ok, fmt("error ratios %.4f, %.4f", r1, r2)};
}

Outcome auc_oracle()
{
    // U*(s) = e^{-s} sampled on a uniform grid of step 0.01 over [0, 10], V = 1.
    Trajectory traj(3);
    for (int i = 0; i <= 1000; ++i) {
        const double s = 0.01 * i;
        traj.push_back(s, std::vector<double>{0.0, std::exp(-s), 1.0});
    }
    const auto s          = compute_Nh(baseline_within_host_params(), traj, 0.0);
    const double expected = 0.24 * (1.0 - std::exp(-10.0)) / 0.57;
    const double rel      = std::abs(s.N_h - expected) / expected;
    return {rel <= 1e-4, fmt("N_h %.10f vs %.10f, relative error %.2e", s.N_h, expected, rel)};
}

Outcome elasticity_cross_oracle()
{
    std::vector<BetweenHostParams> points{coupled_baseline()};
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        points.push_back(test_support::draw_params(rng));
    }
    double worst_rel  = 0.0;
    double worst_unit = 0.0;
    for (const auto& p : points) {
        const auto cf = elasticity_closed_form(p);
        const auto fd = elasticity_finite_difference(p);
        for (auto f : all_between_host_fields) {
            if (fd.at(f)) {
                worst_rel = std::max(worst_rel, std::abs(*cf.at(f) - *fd.at(f)) / std::abs(*cf.at(f)));
            }
        }
        for (auto f : {BetweenHostField::beta, BetweenHostField::Lambda, BetweenHostField::pi}) {
            worst_unit = std::max(worst_unit, std::abs(*cf.at(f) - 1.0));
        }
    }
    const auto base = elasticity_closed_form(points.front());
    const bool agree = worst_rel <= 1e-6;
    const bool unit  = worst_unit <= 1e-12;
    return {agree && unit,
            fmt("closed form vs finite difference: worst relative gap %.2e (%s); phi_beta = phi_Lambda = phi_pi = 1: "
                "worst |phi - 1| %.3e (%s, baseline phi_pi = %.6f)",
                worst_rel, agree ? "ok" : "exceeds 1e-6", worst_unit, unit ? "ok" : "violated",
                *base.at(BetweenHostField::pi))};
}

Outcome stability_threshold()
{
    std::mt19937_64 rng(202);
    int draws = 0;
    int sub   = 0;
    int eig_fail = 0;
    int c1_fail  = 0;
    while (draws < 1000) {
        const auto p  = test_support::draw_params(rng);
        const double R0 = compute_R0(p);
        if (std::abs(R0 - 1.0) <= 0.01) {
            continue;
        }
        ++draws;
        sub += R0 < 1.0;
        const auto r       = routh_hurwitz(p);
        const double sign  = R0 > 1.0 ? 1.0 : -1.0;
        const double lead  = max_real_part(r.eigenvalues_E0);
        eig_fail += !(lead * sign > 0.0);
        c1_fail += !(r.rh.C1 * sign > 0.0);
    }
    return {eig_fail == 0 && c1_fail == 0,
            fmt("%d draws (%d subcritical): eigenvalue sign mismatches %d, C1 sign mismatches %d", draws, sub,
                eig_fail, c1_fail)};
}

Outcome endemic_convergence()
{
    const auto p  = coupled_baseline();
    const auto e1 = equilibria(p).E1;
    if (!e1) {
        return {false, "baseline has no endemic equilibrium"};
    }
    const auto traj = simulate_between_host(p, baseline_between_host_state(), 500.0);
    const auto end  = traj.back();
    const auto ref  = e1->as_array();
    double worst    = 0.0;
    for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, std::abs(end[i] - ref[i]) / ref[i]);
    }
    return {worst <= 1e-3, fmt("R0 %.6f, state at t=500 within %.2e of E1 = (%.6g, %.6g, %.6g)", compute_R0(p), worst,
                               ref[0], ref[1], ref[2])};
}

Outcome bifurcation_localization()
{
    const auto p     = coupled_baseline();
    const double bs  = bifurcation_quantities(p).beta_star;
    const double lo  = 0.5 * bs;
    const double hi  = 2.0 * bs;
    const auto sweep = bifurcation_sweep(p, lo, hi, 101);
    const auto cross = branch_exchange(sweep);
    const double cell = (hi - lo) / 100.0;
    const bool located = cross && std::abs(*cross - bs) <= cell;

    std::mt19937_64 rng(303);
    int backward = 0;
    for (int i = 0; i < 100; ++i) {
        backward += !bifurcation_quantities(test_support::draw_params(rng)).forward();
    }
    return {located && backward == 0,
            fmt("exchange at %.6e vs beta* %.6e (cell %.2e); draws with a >= 0 or b <= 0: %d", cross.value_or(NAN),
                bs, cell, backward)};
}

Outcome intervention_table()
{
    const auto wh     = baseline_within_host_params();
    const auto tables = effectiveness_table(coupled_baseline(), wh);
    const Combo rho{true, false, false};
    const Combo all{true, true, true};
    double rho_gap  = 0.0;
    bool full_top   = true;
    int subset_fail = 0;
    for (const auto& t : tables) {
        rho_gap  = std::max(rho_gap, std::abs(t.row(rho).pct_reduction - 100.0 * t.level));
        full_top = full_top && t.row(all).rank == 8;
        for (const auto& a : t.rows) {
            for (const auto& b : t.rows) {
                subset_fail += a.combo.contains(b.combo) && a.pct_reduction < b.pct_reduction;
            }
        }
    }
    return {rho_gap <= 1e-9 && full_top && subset_fail == 0,
            fmt("rho-only gap %.2e, full combo rank 8 at every level: %s, subset violations %d", rho_gap,
                full_top ? "yes" : "no", subset_fail)};
}

Outcome well_posedness()
{
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    double worst_negative = 0.0;
    double worst_excess   = -INFINITY;
    int bounded_runs      = 0;
    for (int n = 0; n < 50; ++n) {
        const auto p     = test_support::draw_params_near_threshold(rng);
        const double cap = p.Lambda / p.mu;
        // Even draws start inside the feasible region, odd ones above it.
        const double total = (n % 2 == 0 ? frac(rng) : 1.0 + frac(rng)) * cap;
        const double a = frac(rng), b = frac(rng), c = frac(rng);
        const BetweenHostState init{total * a / (a + b + c), total * b / (a + b + c), total * c / (a + b + c)};
        const bool inside = init.total() <= cap;
        bounded_runs += inside;
        const auto traj = integrate(between_host_system(p), init.as_array(), 0.0, 200.0);
        for (std::size_t i = 0; i < traj.size(); ++i) {
            double sum = 0.0;
            for (double v : traj.state(i)) {
                worst_negative = std::min(worst_negative, v);
                sum += v;
            }
            if (inside) {
                worst_excess = std::max(worst_excess, sum - cap);
            }
        }
    }
    const bool ok = worst_negative >= -1e-9 && worst_excess <= 1e-6;
    return {ok, fmt("50 runs (%d inside the feasible region): min component %.3e, max S+E+I - Lambda/mu %.3e",
                    bounded_runs, worst_negative, worst_excess)};
}

Outcome influence_ordering()
{
    const auto wh = baseline_within_host_params();
    const auto bh = coupled_baseline();
    struct Case {
        WithinHostKnob knob;
        std::vector<double> values;
        bool increasing;
    };
    const Case cases[] = {
        {WithinHostKnob::alpha, {0.24, 0.5, 0.7}, true},
        {WithinHostKnob::x, {0.5, 0.795, 0.85}, false},
        {WithinHostKnob::y, {0.56, 0.7, 0.8}, false},
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        const auto runs = within_host_influence(wh, bh, c.knob, c.values);
        bool ordered    = true;
        detail += std::string(detail.empty() ? "" : "; ") + std::string(to_string(c.knob)) + " I(100) =";
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const double I = runs[i].trajectory.back()[2];
            detail += fmt(" %.4g", I);
            if (i > 0) {
                const double prev = runs[i - 1].trajectory.back()[2];
                ordered           = ordered && (c.increasing ? I > prev : I < prev);
            }
        }
        detail += ordered ? " (ordered)" : (c.increasing ? " (not increasing)" : " (not decreasing)");
        ok = ok && ordered;
    }
    return {ok, detail};
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism()
{
    const auto root = fs::temp_directory_path() / "nestedepi_acceptance_determinism";
    fs::remove_all(root);
    const ScenarioConfig config;
    int compared   = 0;
    int mismatches = 0;
    for (auto command : {Command::heatmap, Command::interventions}) {
        std::vector<std::string> reference;
        int run = 0;
        for (auto exec : {Execution::parallel, Execution::parallel, Execution::serial}) {
            RunOptions o;
            o.out_dir = root / (std::string(to_string(command)) + std::to_string(run++));
            o.exec    = exec;
            const auto result = run_subcommand(command, config, o);
            std::vector<std::string> contents;
            for (const auto& path : result.outputs) {
                if (path.filename() != "manifest.json") {
                    contents.push_back(read_file(path));
                }
            }
            if (reference.empty()) {
                reference = contents;
                continue;
            }
            compared += static_cast<int>(contents.size());
            mismatches += contents != reference;
        }
    }
    fs::remove_all(root);
    return {mismatches == 0 && compared > 0,
            fmt("%d files compared across parallel, parallel and serial runs; differing runs %d", compared, mismatches)};
}

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {1, "integrator order", 1.0, integrator_order},
        {2, "AUC oracle", 1.0, auc_oracle},
        {3, "elasticity cross-oracle", 5.0, elasticity_cross_oracle},
        {4, "stability threshold", 10.0, stability_threshold},
        {5, "endemic convergence", 5.0, endemic_convergence},
        {6, "bifurcation localization", 5.0, bifurcation_localization},
        {7, "intervention table", 30.0, intervention_table},
        {8, "well-posedness invariants", 10.0, well_posedness},
        {9, "within-host influence ordering", 10.0, influence_ordering},
        {10, "determinism", 30.0, determinism},
    };
    return all;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }
    int failures = 0;
    for (const auto& c : criteria()) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        }
        catch (const std::exception& e) {
            outcome = {false, std::string("threw: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time   = seconds < c.budget_seconds;
        const bool pass      = outcome.pass && in_time;
        failures += !pass;
        std::printf("criterion %2d %s: %s | %s | %.3f s of %.0f s%s\n", c.id, pass ? "PASS" : "FAIL", c.title,
                    outcome.detail.c_str(), seconds, c.budget_seconds, in_time ? "" : " (over budget)");
    }
    return failures == 0 ? 0 : 1;
}
