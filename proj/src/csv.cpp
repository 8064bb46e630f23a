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
#include "nestedepi/csv.hpp"

#include <charconv>
#include <cmath>

namespace nestedepi::csv
{

std::string format(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace
{

void kv(std::ostream& out, std::string_view key, double v)
{
    out << key << ',' << format(v) << '\n';
}

void kv(std::ostream& out, std::string_view key, std::string_view v)
{
    out << key << ',' << v << '\n';
}

void write_state(std::ostream& out, std::string_view prefix, const BetweenHostState& s)
{
    kv(out, std::string(prefix) + "_S", s.S);
    kv(out, std::string(prefix) + "_E", s.E);
    kv(out, std::string(prefix) + "_I", s.I);
}

void write_roots(std::ostream& out, std::string_view prefix, const CubicRoots& roots)
{
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto base = std::string(prefix) + "_" + std::to_string(i + 1);
        kv(out, base + "_re", roots[i].real());
        kv(out, base + "_im", roots[i].imag());
    }
}

} // namespace

void write_trajectory(std::ostream& out, const Trajectory& traj, std::string_view header)
{
    out << header << '\n';
    for (std::size_t i = 0; i < traj.size(); ++i) {
        out << format(traj.times()[i]);
        for (double v : traj.state(i)) {
            out << ',' << format(v);
        }
        out << '\n';
    }
}

void write_coupling_summary(std::ostream& out, const CouplingSummary& s)
{
    out << "key,value\n";
    kv(out, "N_h", s.N_h);
    kv(out, "s_begin", s.window.s_begin);
    kv(out, "s_end", s.window.s_end);
    kv(out, "integral_Ustar", s.integral_Ustar);
    kv(out, "detection_limit", s.detection_limit);
    kv(out, "horizon", s.horizon);
    kv(out, "alpha", s.alpha);
    kv(out, "y_plus_mu_v", s.y_plus_mu_v);
    kv(out, "empty_window", s.empty_window ? "true" : "false");
}

void write_stability_report(std::ostream& out, const StabilityReport& r)
{
    out << "key,value\n";
    kv(out, "R0", r.R0);
    write_state(out, "E0", r.E0);
    write_state(out, "E1", r.E1.value_or(BetweenHostState{NAN, NAN, NAN}));
    write_roots(out, "eig_E0", r.eigenvalues_E0);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    write_roots(out, "eig_E1", r.eigenvalues_E1.value_or(CubicRoots{{{nan, nan}, {nan, nan}, {nan, nan}}}));
    kv(out, "A1", r.rh.A1);
    kv(out, "B1", r.rh.B1);
    kv(out, "C1", r.rh.C1);
    kv(out, "rh_margin", r.rh_margin);
    kv(out, "coefficient_mismatch", r.coefficient_mismatch);
    kv(out, "threshold_consistent", r.threshold_consistent ? "true" : "false");
    kv(out, "classification_E0", to_string(r.classification_E0));
    kv(out, "classification_E1", to_string(r.classification_E1));
}

void write_bifurcation_quantities(std::ostream& out, const BifurcationQuantities& q, double R0_at_beta_star)
{
    out << "key,value\n";
    kv(out, "beta_star", q.beta_star);
    kv(out, "a", q.a_coeff);
    kv(out, "b", q.b_coeff);
    kv(out, "R0_at_beta_star", R0_at_beta_star);
    kv(out, "forward", q.forward() ? "true" : "false");
}

void write_elasticities(std::ostream& out, const ElasticityReport& closed_form,
                        const ElasticityReport& finite_difference)
{
    out << "parameter,closed_form,finite_difference,abs_diff\n";
    for (std::size_t i = 0; i < all_between_host_fields.size(); ++i) {
        const auto cf = closed_form.values[i];
        const auto fd = finite_difference.values[i];
        out << field_name(all_between_host_fields[i]) << ',' << (cf ? format(*cf) : "na") << ','
            << (fd ? format(*fd) : "na") << ',' << (cf && fd ? format(std::abs(*cf - *fd)) : "na") << '\n';
    }
}

void write_bifurcation_sweep(std::ostream& out, const SweepGrid& sweep)
{
    out << "beta,R0,I_star_dfe,I_star_endemic,stable_branch\n";
    for (std::size_t i = 0; i < sweep.nx(); ++i) {
        const auto& c = sweep.at(i);
        out << format(sweep.x.values[i]) << ',' << format(c.R0) << ',' << format(0.0) << ','
            << format(c.I_star.value_or(std::numeric_limits<double>::quiet_NaN())) << ','
            << to_string(c.stable_equilibrium) << '\n';
    }
}

void write_heat_grid(std::ostream& out, const SweepGrid& grid)
{
    out << "x_name,y_name,x,y,R0,region\n";
    const std::string y_name = grid.y ? grid.y->name : "";
    for (std::size_t iy = 0; iy < grid.ny(); ++iy) {
        for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
            const auto& c = grid.at(ix, iy);
            out << grid.x.name << ',' << y_name << ',' << format(grid.x.values[ix]) << ','
                << (grid.y ? format(grid.y->values[iy]) : "") << ',' << format(c.R0) << ','
                << (c.R0 < 1.0 ? "subcritical" : "supercritical") << '\n';
        }
    }
}

void write_effectiveness(std::ostream& out, const std::vector<EffectivenessTable>& tables)
{
    out << "combo,level,R_E,pct_reduction,rank\n";
    for (const auto& t : tables) {
        for (const auto& r : t.rows) {
            out << r.combo.name() << ',' << format(r.level) << ',' << format(r.R_E) << ','
                << format(r.pct_reduction) << ',' << r.rank << '\n';
        }
    }
}

void write_influence(std::ostream& out, WithinHostKnob knob, const std::vector<InfluenceRun>& runs)
{
    out << "parameter,value,N_h,R0,t,S,E,I\n";
    for (const auto& run : runs) {
        const auto& traj = run.trajectory;
        for (std::size_t i = 0; i < traj.size(); ++i) {
            out << to_string(knob) << ',' << format(run.value) << ',' << format(run.coupling.N_h) << ','
                << format(run.R0) << ',' << format(traj.times()[i]);
            for (double v : traj.state(i)) {
                out << ',' << format(v);
            }
            out << '\n';
        }
    }
}

} // namespace nestedepi::csv
