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
#include "nestedepi/config.hpp"
#include "nestedepi/csv.hpp"
#include "nestedepi/error.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace nestedepi
{

namespace pt = boost::property_tree;

CouplingSetup ScenarioConfig::coupling_setup() const
{
    CouplingSetup s;
    s.initial         = within_host.initial;
    s.horizon         = within_host.horizon;
    s.detection_limit = coupling.detection_limit;
    s.integrator      = coupling.integrator;
    return s;
}

BetweenHostParams ScenarioConfig::between_host_params(double N_h) const
{
    auto p = between_host.params;
    p.N_h  = N_h;
    return p;
}

void ScenarioConfig::validate() const
{
    within_host.params.validate();
    const auto wh0 = within_host.initial;
    for (auto [v, name] : {std::pair{wh0.U, "U0"}, {wh0.U_star, "U_star0"}, {wh0.V, "V0"}}) {
        if (!std::isfinite(v) || v < 0) {
            throw ParameterError(name, "initial within-host state must be finite and non-negative");
        }
    }
    if (!(within_host.horizon > 0) || !std::isfinite(within_host.horizon)) {
        throw ParameterError("within_host.horizon", "must be positive");
    }

    if (!(between_host.params.mu > 0)) {
        throw ParameterError("mu", "must be positive");
    }
    between_host.params.validate();
    const auto bh0 = between_host.initial;
    for (auto [v, name] : {std::pair{bh0.S, "S0"}, {bh0.E, "E0"}, {bh0.I, "I0"}}) {
        if (!std::isfinite(v) || v < 0) {
            throw ParameterError(name, "initial between-host state must be finite and non-negative");
        }
    }
    if (!(between_host.horizon > 0) || !std::isfinite(between_host.horizon)) {
        throw ParameterError("between_host.horizon", "must be positive");
    }

    if (!(coupling.detection_limit >= 0) || !std::isfinite(coupling.detection_limit)) {
        throw ParameterError("detection_limit", "must be finite and non-negative");
    }
    coupling.integrator.validate();
    interventions.efficacies.validate();
    for (double level : interventions.levels) {
        if (!(level > 0 && level < 1)) {
            throw ParameterError("levels", "efficacy levels must lie in (0, 1)");
        }
    }
}

namespace
{

const std::map<std::string, std::set<std::string>>& schema()
{
    static const std::map<std::string, std::set<std::string>> keys{
        {"within_host",
         {"omega", "k", "mu_c", "mu_v", "alpha", "d1", "d2", "d3", "d4", "d5", "d6", "b1", "b2", "b3", "b4", "b5",
          "b6", "x", "y", "U0", "U_star0", "V0", "horizon"}},
        {"between_host", {"Lambda", "beta", "mu", "pi", "gamma1", "gamma2", "d", "S0", "E0", "I0", "horizon"}},
        {"coupling", {"detection_limit", "method", "step", "abs_tol", "rel_tol", "max_steps", "max_step"}},
        {"interventions", {"epsilon", "gamma_k", "delta", "rho", "levels"}},
        {"output", {"directory", "recovered"}},
    };
    return keys;
}

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

/// "section.key" -> 1-based line of its definition; overrides map to 0.
std::map<std::string, unsigned long> index_lines(std::string_view text)
{
    std::map<std::string, unsigned long> lines;
    std::string section;
    std::istringstream in{std::string(text)};
    std::string line;
    unsigned long no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto t = trim(line);
        if (t.empty() || t[0] == ';' || t[0] == '#') {
            continue;
        }
        if (t.front() == '[' && t.back() == ']') {
            section = trim(std::string_view(t).substr(1, t.size() - 2));
            lines.emplace(section, no);
            continue;
        }
        const auto eq = t.find('=');
        if (eq != std::string::npos) {
            lines[section + "." + trim(std::string_view(t).substr(0, eq))] = no;
        }
    }
    return lines;
}

/// Drops "; ..." and "# ..." comments, whole-line or trailing after whitespace.
std::string strip_comments(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string out;
    std::string line;
    while (std::getline(in, line)) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if ((line[i] == ';' || line[i] == '#') && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
                line.erase(i);
                break;
            }
        }
        out += line;
        out += '\n';
    }
    return out;
}

class Reader
{
public:
    Reader(const pt::ptree& tree, std::map<std::string, unsigned long> lines)
        : m_tree(tree)
        , m_lines(std::move(lines))
    {
    }

    bool has(const std::string& path) const
    {
        return static_cast<bool>(m_tree.get_child_optional(pt::ptree::path_type(path, '.')));
    }

    std::string text(const std::string& path) const
    {
        return trim(m_tree.get<std::string>(pt::ptree::path_type(path, '.')));
    }

    unsigned long line(const std::string& path) const
    {
        const auto it = m_lines.find(path);
        return it == m_lines.end() ? 0 : it->second;
    }

    double number(const std::string& path, double fallback) const
    {
        if (!has(path)) {
            return fallback;
        }
        return parse_number(path, text(path));
    }

    double parse_number(const std::string& path, const std::string& s) const
    {
        double v       = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
            throw ConfigError(path + ": expected a number, got '" + s + "'", line(path));
        }
        return v;
    }

    bool boolean(const std::string& path, bool fallback) const
    {
        if (!has(path)) {
            return fallback;
        }
        const auto s = text(path);
        if (s == "true" || s == "1" || s == "yes") {
            return true;
        }
        if (s == "false" || s == "0" || s == "no") {
            return false;
        }
        throw ConfigError(path + ": expected true or false, got '" + s + "'", line(path));
    }

    const pt::ptree& tree() const
    {
        return m_tree;
    }

private:
    const pt::ptree& m_tree;
    std::map<std::string, unsigned long> m_lines;
};

void reject_unknown(const Reader& r)
{
    for (const auto& [section, child] : r.tree()) {
        const auto known = schema().find(section);
        if (known == schema().end()) {
            if (child.empty()) {
                throw ConfigError("key '" + section + "' outside of a section", r.line("." + section));
            }
            throw ConfigError("unknown section [" + section + "]", r.line(section));
        }
        for (const auto& [key, value] : child) {
            if (!known->second.contains(key)) {
                throw ConfigError("unknown key " + section + "." + key, r.line(section + "." + key));
            }
        }
    }
}

WithinHostParams read_within_host_params(const Reader& r)
{
    const auto base = baseline_within_host_params();
    const double omega = r.number("within_host.omega", base.omega);
    const double k     = r.number("within_host.k", base.k);
    const double mu_c  = r.number("within_host.mu_c", base.mu_c);
    const double mu_v  = r.number("within_host.mu_v", base.mu_v);
    const double alpha = r.number("within_host.alpha", base.alpha);

    bool any_rate = false;
    for (int i = 1; i <= 6; ++i) {
        any_rate = any_rate || r.has("within_host.d" + std::to_string(i)) || r.has("within_host.b" + std::to_string(i));
    }
    const bool any_aggregate = r.has("within_host.x") || r.has("within_host.y");
    if (any_rate && any_aggregate) {
        throw ConfigError("within_host: give either d1..d6/b1..b6 or the aggregates x/y, not both",
                          r.line(r.has("within_host.x") ? "within_host.x" : "within_host.y"));
    }
    if (any_aggregate) {
        return WithinHostParams::from_aggregates(omega, k, mu_c, mu_v, alpha, r.number("within_host.x", base.x()),
                                                 r.number("within_host.y", base.y()));
    }

    ClearanceRates rates = *base.rates();
    const auto read_group = [&](char prefix, std::array<double, 6>& out) {
        int present = 0;
        for (int i = 1; i <= 6; ++i) {
            present += r.has(std::string("within_host.") + prefix + std::to_string(i));
        }
        if (present != 0 && present != 6) {
            throw ConfigError(std::string("within_host: ") + prefix + "1.." + prefix +
                              "6 must be given together");
        }
        for (int i = 1; i <= 6; ++i) {
            const auto key = std::string("within_host.") + prefix + std::to_string(i);
            out[static_cast<std::size_t>(i - 1)] = r.number(key, out[static_cast<std::size_t>(i - 1)]);
        }
    };
    read_group('d', rates.infected_cell);
    read_group('b', rates.virion);
    return WithinHostParams::from_rates(omega, k, mu_c, mu_v, alpha, rates);
}

ScenarioConfig read_scenario(const Reader& r)
{
    ScenarioConfig c;
    c.within_host.params    = read_within_host_params(r);
    c.within_host.initial.U = r.number("within_host.U0", c.within_host.initial.U);
    c.within_host.initial.U_star = r.number("within_host.U_star0", c.within_host.initial.U_star);
    c.within_host.initial.V = r.number("within_host.V0", c.within_host.initial.V);
    c.within_host.horizon   = r.number("within_host.horizon", c.within_host.horizon);

    auto& bh     = c.between_host;
    auto& p      = bh.params;
    p.beta       = r.number("between_host.beta", p.beta);
    p.mu         = r.number("between_host.mu", p.mu);
    p.pi         = r.number("between_host.pi", p.pi);
    p.gamma1     = r.number("between_host.gamma1", p.gamma1);
    p.gamma2     = r.number("between_host.gamma2", p.gamma2);
    p.d          = r.number("between_host.d", p.d);
    bh.initial.S = r.number("between_host.S0", bh.initial.S);
    bh.initial.E = r.number("between_host.E0", bh.initial.E);
    bh.initial.I = r.number("between_host.I0", bh.initial.I);
    bh.horizon   = r.number("between_host.horizon", bh.horizon);
    bh.lambda_auto = !r.has("between_host.Lambda") || r.text("between_host.Lambda") == "auto";
    p.Lambda = bh.lambda_auto ? lambda_from_population(p.mu, bh.initial)
                              : r.parse_number("between_host.Lambda", r.text("between_host.Lambda"));
    p.N_h = 0.0;

    auto& cp           = c.coupling;
    cp.detection_limit = r.number("coupling.detection_limit", cp.detection_limit);
    if (r.has("coupling.method")) {
        const auto m = r.text("coupling.method");
        if (m == "adaptive_rk45") {
            cp.integrator.method = Method::adaptive_rk45;
        }
        else if (m == "fixed_rk4") {
            cp.integrator.method = Method::fixed_rk4;
        }
        else {
            throw ConfigError("coupling.method: expected adaptive_rk45 or fixed_rk4, got '" + m + "'",
                              r.line("coupling.method"));
        }
    }
    cp.integrator.step    = r.number("coupling.step", cp.integrator.step);
    cp.integrator.abs_tol = r.number("coupling.abs_tol", cp.integrator.abs_tol);
    cp.integrator.rel_tol = r.number("coupling.rel_tol", cp.integrator.rel_tol);
    const double max_steps = r.number("coupling.max_steps", static_cast<double>(cp.integrator.max_steps));
    if (max_steps != std::floor(max_steps) || max_steps < 1 || max_steps > 9e18) {
        throw ConfigError("coupling.max_steps: expected a positive integer", r.line("coupling.max_steps"));
    }
    cp.integrator.max_steps = static_cast<std::int64_t>(max_steps);
    cp.integrator.max_step  = r.number("coupling.max_step", cp.integrator.max_step);

    auto& iv              = c.interventions;
    iv.efficacies.epsilon = r.number("interventions.epsilon", 0.0);
    iv.efficacies.gamma_k = r.number("interventions.gamma_k", 0.0);
    iv.efficacies.delta   = r.number("interventions.delta", 0.0);
    iv.efficacies.rho     = r.number("interventions.rho", 0.0);
    if (r.has("interventions.levels")) {
        iv.levels.clear();
        std::istringstream in(r.text("interventions.levels"));
        std::string item;
        while (std::getline(in, item, ',')) {
            iv.levels.push_back(r.parse_number("interventions.levels", trim(item)));
        }
    }

    if (r.has("output.directory")) {
        c.output.directory = r.text("output.directory");
    }
    c.output.recovered = r.boolean("output.recovered", c.output.recovered);
    return c;
}

} // namespace

ScenarioConfig parse_config(std::string_view text, const std::vector<std::string>& overrides)
{
    pt::ptree tree;
    try {
        std::istringstream in{strip_comments(text)};
        pt::read_ini(in, tree);
    }
    catch (const pt::ini_parser_error& e) {
        throw ConfigError(e.message(), e.line());
    }

    auto lines = index_lines(strip_comments(text));
    for (const auto& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("override '" + item + "' is not of the form section.key=value");
        }
        const auto path = trim(std::string_view(item).substr(0, eq));
        const auto dot  = path.find('.');
        if (dot == std::string::npos || dot == 0 || dot + 1 == path.size() ||
            path.find('.', dot + 1) != std::string::npos) {
            throw ConfigError("override key '" + path + "' must be section.key");
        }
        tree.put(pt::ptree::path_type(path, '.'), trim(std::string_view(item).substr(eq + 1)));
        lines[path] = 0;
    }

    Reader reader(tree, std::move(lines));
    reject_unknown(reader);
    auto config = read_scenario(reader);
    config.validate();
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading config file " + path.string());
    }
    return parse_config(text.str(), overrides);
}

std::string to_ini(const ScenarioConfig& c)
{
    using csv::format;
    std::ostringstream out;
    const auto& wp = c.within_host.params;
    out << "[within_host]\n";
    out << "omega = " << format(wp.omega) << "\n";
    out << "k = " << format(wp.k) << "\n";
    out << "mu_c = " << format(wp.mu_c) << "\n";
    out << "mu_v = " << format(wp.mu_v) << "\n";
    out << "alpha = " << format(wp.alpha) << "\n";
    if (wp.rates()) {
        for (std::size_t i = 0; i < 6; ++i) {
            out << "d" << i + 1 << " = " << format(wp.rates()->infected_cell[i]) << "\n";
        }
        for (std::size_t i = 0; i < 6; ++i) {
            out << "b" << i + 1 << " = " << format(wp.rates()->virion[i]) << "\n";
        }
    }
    else {
        out << "x = " << format(wp.x()) << "\n";
        out << "y = " << format(wp.y()) << "\n";
    }
    out << "U0 = " << format(c.within_host.initial.U) << "\n";
    out << "U_star0 = " << format(c.within_host.initial.U_star) << "\n";
    out << "V0 = " << format(c.within_host.initial.V) << "\n";
    out << "horizon = " << format(c.within_host.horizon) << "\n";

    const auto& bp = c.between_host.params;
    out << "\n[between_host]\n";
    out << "Lambda = " << (c.between_host.lambda_auto ? std::string("auto") : format(bp.Lambda)) << "\n";
    out << "beta = " << format(bp.beta) << "\n";
    out << "mu = " << format(bp.mu) << "\n";
    out << "pi = " << format(bp.pi) << "\n";
    out << "gamma1 = " << format(bp.gamma1) << "\n";
    out << "gamma2 = " << format(bp.gamma2) << "\n";
    out << "d = " << format(bp.d) << "\n";
    out << "S0 = " << format(c.between_host.initial.S) << "\n";
    out << "E0 = " << format(c.between_host.initial.E) << "\n";
    out << "I0 = " << format(c.between_host.initial.I) << "\n";
    out << "horizon = " << format(c.between_host.horizon) << "\n";

    const auto& ic = c.coupling.integrator;
    out << "\n[coupling]\n";
    out << "detection_limit = " << format(c.coupling.detection_limit) << "\n";
    out << "method = " << (ic.method == Method::fixed_rk4 ? "fixed_rk4" : "adaptive_rk45") << "\n";
    out << "step = " << format(ic.step) << "\n";
    out << "abs_tol = " << format(ic.abs_tol) << "\n";
    out << "rel_tol = " << format(ic.rel_tol) << "\n";
    out << "max_steps = " << ic.max_steps << "\n";
    out << "max_step = " << format(ic.max_step) << "\n";

    const auto& e = c.interventions.efficacies;
    out << "\n[interventions]\n";
    out << "epsilon = " << format(e.epsilon) << "\n";
    out << "gamma_k = " << format(e.gamma_k) << "\n";
    out << "delta = " << format(e.delta) << "\n";
    out << "rho = " << format(e.rho) << "\n";
    out << "levels = ";
    for (std::size_t i = 0; i < c.interventions.levels.size(); ++i) {
        out << (i ? "," : "") << format(c.interventions.levels[i]);
    }
    out << "\n";

    out << "\n[output]\n";
    if (!c.output.directory.empty()) {
        out << "directory = " << c.output.directory << "\n";
    }
    out << "recovered = " << (c.output.recovered ? "true" : "false") << "\n";
    return out.str();
}

} // namespace nestedepi
