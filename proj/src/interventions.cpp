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
#include "nestedepi/interventions.hpp"
#include "nestedepi/analysis.hpp"
#include "nestedepi/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <numeric>

namespace nestedepi
{

std::string Combo::name() const
{
    std::string out;
    const auto add = [&](bool on, const char* member) {
        if (on) {
            out += out.empty() ? "" : "+";
            out += member;
        }
    };
    add(rho, "rho");
    add(delta, "delta");
    add(epsilon, "epsilon");
    return out.empty() ? "none" : out;
}

InterventionEfficacies Combo::at_level(double level) const
{
    InterventionEfficacies eff;
    eff.rho     = rho ? level : 0.0;
    eff.delta   = delta ? level : 0.0;
    eff.epsilon = epsilon ? level : 0.0;
    return eff;
}

bool Combo::contains(const Combo& other) const
{
    return (rho || !other.rho) && (delta || !other.delta) && (epsilon || !other.epsilon);
}

double effective_R(const BetweenHostParams& base_bh, const WithinHostParams& base_wh,
                   const InterventionEfficacies& eff, const CouplingSetup& setup)
{
    eff.validate();
    auto treated = base_bh;
    treated.N_h  = compute_Nm(base_wh, eff, setup).N_h;
    treated.beta = base_bh.beta * (1.0 - eff.rho);
    return compute_R0(treated);
}

double pct_reduction(double R0, double R_E)
{
    if (!(R0 > 0)) {
        throw ParameterError("R0", "percentage reduction is undefined for R0 <= 0");
    }
    return (R0 - R_E) / R0 * 100.0;
}

const EffectivenessRow& EffectivenessTable::row(const Combo& c) const
{
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.combo == c; });
    if (it == rows.end()) {
        throw ParameterError("combo", c.name() + " not in table");
    }
    return *it;
}

void assign_ranks(std::vector<EffectivenessRow>& rows)
{
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ra = rows[a];
        const auto& rb = rows[b];
        if (ra.pct_reduction != rb.pct_reduction) {
            return ra.pct_reduction < rb.pct_reduction;
        }
        if (ra.combo.cardinality() != rb.combo.cardinality()) {
            return ra.combo.cardinality() < rb.combo.cardinality();
        }
        return ra.combo.name() < rb.combo.name();
    });
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        rows[order[pos]].rank = static_cast<int>(pos + 1);
    }
}

std::vector<EffectivenessTable> effectiveness_table(const BetweenHostParams& base_bh,
                                                    const WithinHostParams& base_wh,
                                                    std::span<const double> levels, const CouplingSetup& setup,
                                                    Execution exec)
{
    for (double level : levels) {
        if (!(level > 0.0 && level < 1.0)) {
            throw ParameterError("levels", "efficacy levels must lie in (0, 1)");
        }
    }
    auto untreated = base_bh;
    untreated.N_h  = compute_Nh(base_wh, setup).N_h;
    const double R0 = compute_R0(untreated);

    const std::size_t n_combos = all_combos.size();
    std::vector<EffectivenessRow> flat(levels.size() * n_combos);
    detail::for_each_index(flat.size(), exec, [&](std::size_t idx) {
        const double level = levels[idx / n_combos];
        const Combo combo  = all_combos[idx % n_combos];
        EffectivenessRow row;
        row.combo         = combo;
        row.level         = level;
        row.R_E           = effective_R(untreated, base_wh, combo.at_level(level), setup);
        row.pct_reduction = pct_reduction(R0, row.R_E);
        flat[idx]         = row;
    });

    std::vector<EffectivenessTable> tables;
    for (std::size_t l = 0; l < levels.size(); ++l) {
        EffectivenessTable table;
        table.level = levels[l];
        table.R0    = R0;
        table.rows.assign(flat.begin() + static_cast<std::ptrdiff_t>(l * n_combos),
                          flat.begin() + static_cast<std::ptrdiff_t>((l + 1) * n_combos));
        assign_ranks(table.rows);
        tables.push_back(std::move(table));
    }
    return tables;
}

} // namespace nestedepi
