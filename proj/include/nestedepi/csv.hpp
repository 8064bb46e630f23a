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
#ifndef NESTEDEPI_CSV_HPP
#define NESTEDEPI_CSV_HPP

#include "nestedepi/analysis.hpp"
#include "nestedepi/coupling.hpp"
#include "nestedepi/integrator.hpp"
#include "nestedepi/interventions.hpp"
#include "nestedepi/sensitivity.hpp"
#include "nestedepi/sweeps.hpp"

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nestedepi::csv
{

/// 17 significant digits; non-finite values print as nan, inf, -inf.
std::string format(double v);

/// Header is e.g. "s,U,U_star,V"; first column is time.
void write_trajectory(std::ostream& out, const Trajectory& traj, std::string_view header);

void write_coupling_summary(std::ostream& out, const CouplingSummary& s);

/// Flat "key,value" record.
void write_stability_report(std::ostream& out, const StabilityReport& r);

void write_bifurcation_quantities(std::ostream& out, const BifurcationQuantities& q, double R0_at_beta_star);

/// "parameter,closed_form,finite_difference,abs_diff"
void write_elasticities(std::ostream& out, const ElasticityReport& closed_form,
                        const ElasticityReport& finite_difference);

/// "beta,R0,I_star_dfe,I_star_endemic,stable_branch"
void write_bifurcation_sweep(std::ostream& out, const SweepGrid& sweep);

/// "x_name,y_name,x,y,R0,region"
void write_heat_grid(std::ostream& out, const SweepGrid& grid);

/// "combo,level,R_E,pct_reduction,rank"
void write_effectiveness(std::ostream& out, const std::vector<EffectivenessTable>& tables);

/// "parameter,value,N_h,R0,t,S,E,I"
void write_influence(std::ostream& out, WithinHostKnob knob, const std::vector<InfluenceRun>& runs);

} // namespace nestedepi::csv

#endif // NESTEDEPI_CSV_HPP
