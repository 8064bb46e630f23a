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
#include "nestedepi/runner.hpp"
#include "nestedepi/analysis.hpp"
#include "nestedepi/csv.hpp"
#include "nestedepi/error.hpp"
#include "nestedepi/interventions.hpp"
#include "nestedepi/sensitivity.hpp"

#include <Eigen/Core>
#include <boost/version.hpp>
#include <json.hpp>
#include <openssl/evp.h>
#include <openssl/opensslv.h>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef NESTEDEPI_VERSION
#define NESTEDEPI_VERSION "unknown"
#endif

namespace nestedepi
{

namespace fs = std::filesystem;

std::string_view to_string(Command c)
{
    switch (c) {
    case Command::simulate:
        return "simulate";
    case Command::analyze:
        return "analyze";
    case Command::elasticity:
        return "elasticity";
    case Command::bifurcate:
        return "bifurcate";
    case Command::heatmap:
        return "heatmap";
    case Command::interventions:
        return "interventions";
    case Command::influence:
        return "influence";
    }
    return "unknown";
}

Command parse_command(std::string_view name)
{
    for (auto c : {Command::simulate, Command::analyze, Command::elasticity, Command::bifurcate, Command::heatmap,
                   Command::interventions, Command::influence}) {
        if (to_string(c) == name) {
            return c;
        }
    }
    throw ParameterError("command", "unknown subcommand '" + std::string(name) + "'");
}

AxisSpec parse_axis_spec(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string_view::npos) {
            break;
        }
        start = colon + 1;
    }
    if (parts.size() != 4) {
        throw ParameterError("grid", "expected name:lo:hi:n, got '" + std::string(text) + "'");
    }
    AxisSpec spec;
    spec.name = std::string(parts[0]);
    parse_field(spec.name);
    const auto number = [&](std::string_view s, auto& v) {
        const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
        if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
            throw ParameterError("grid", "malformed number '" + std::string(s) + "' in '" + std::string(text) + "'");
        }
    };
    number(parts[1], spec.lo);
    number(parts[2], spec.hi);
    number(parts[3], spec.n);
    return spec;
}

namespace
{

std::string sha256_hex(std::string_view data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string utc_timestamp(std::chrono::system_clock::time_point t)
{
    const auto secs = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&secs, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class OutputSet
{
public:
    explicit OutputSet(fs::path dir)
        : m_dir(std::move(dir))
    {
        std::error_code ec;
        fs::create_directories(m_dir, ec);
        if (ec) {
            throw IoError("cannot create output directory " + m_dir.string() + ": " + ec.message());
        }
    }

    void write(const std::string& name, const std::string& content)
    {
        const auto path = m_dir / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << content;
        out.close();
        if (!out) {
            throw IoError("cannot write " + path.string());
        }
        m_files.push_back({name, content.size(), sha256_hex(content)});
        m_paths.push_back(path);
    }

    template <class Writer>
    void write_csv(const std::string& name, Writer&& writer)
    {
        std::ostringstream out;
        writer(out);
        write(name, out.str());
    }

    nlohmann::json manifest_entries() const
    {
        auto entries = nlohmann::json::array();
        for (const auto& f : m_files) {
            entries.push_back({{"file", f.name}, {"bytes", f.bytes}, {"sha256", f.sha256}});
        }
        return entries;
    }

    std::vector<fs::path> paths() const
    {
        return m_paths;
    }

private:
    struct File {
        std::string name;
        std::size_t bytes;
        std::string sha256;
    };
    fs::path m_dir;
    std::vector<File> m_files;
    std::vector<fs::path> m_paths;
};

std::vector<double> default_knob_values(WithinHostKnob knob)
{
    switch (knob) {
    case WithinHostKnob::alpha:
        return {0.24, 0.5, 0.7};
    case WithinHostKnob::x:
        return {0.5, 0.795, 0.85};
    case WithinHostKnob::y:
        return {0.56, 0.7, 0.8};
    }
    return {};
}

void write_between_host(std::ostream& out, const Trajectory& traj, const std::vector<double>* recovered)
{
    out << "t,S,E,I" << (recovered ? ",R" : "") << '\n';
    for (std::size_t i = 0; i < traj.size(); ++i) {
        out << csv::format(traj.times()[i]);
        for (double v : traj.state(i)) {
            out << ',' << csv::format(v);
        }
        if (recovered) {
            out << ',' << csv::format((*recovered)[i]);
        }
        out << '\n';
    }
}

} // namespace

RunResult run_subcommand(Command command, const ScenarioConfig& config, const RunOptions& options)
{
    config.validate();
    const auto started = std::chrono::system_clock::now();
    OutputSet outputs(options.out_dir);

    const auto setup    = config.coupling_setup();
    const auto& wh      = config.within_host;
    const auto& bh      = config.between_host;
    const auto coupling = compute_Nh(wh.params, setup);
    const auto params   = config.between_host_params(coupling.N_h);

    switch (command) {
    case Command::simulate: {
        const auto within = simulate_within_host(wh.params, wh.initial, wh.horizon, config.coupling.integrator);
        const auto between = simulate_between_host(params, bh.initial, bh.horizon, config.coupling.integrator);
        outputs.write_csv("within_host.csv", [&](std::ostream& o) {
            csv::write_trajectory(o, within, "s,U,U_star,V");
        });
        outputs.write_csv("coupling.csv", [&](std::ostream& o) {
            csv::write_coupling_summary(o, coupling);
        });
        std::vector<double> recovered;
        if (config.output.recovered) {
            recovered = reconstruct_recovered(params, between);
        }
        outputs.write_csv("between_host.csv", [&](std::ostream& o) {
            write_between_host(o, between, config.output.recovered ? &recovered : nullptr);
        });
        break;
    }
    case Command::analyze: {
        outputs.write_csv("coupling.csv", [&](std::ostream& o) {
            csv::write_coupling_summary(o, coupling);
        });
        outputs.write_csv("stability.csv", [&](std::ostream& o) {
            csv::write_stability_report(o, routh_hurwitz(params));
        });
        break;
    }
    case Command::elasticity: {
        const auto closed = elasticity_closed_form(params);
        const auto fd     = elasticity_finite_difference(params, options.rel_step);
        outputs.write_csv("elasticities.csv", [&](std::ostream& o) {
            csv::write_elasticities(o, closed, fd);
        });
        break;
    }
    case Command::bifurcate: {
        const auto q   = bifurcation_quantities(params);
        auto at_critical = params;
        at_critical.beta = q.beta_star;
        const auto range = options.beta_range.value_or(std::pair{0.5 * q.beta_star, 2.0 * q.beta_star});
        const auto sweep = bifurcation_sweep(params, range.first, range.second, options.beta_points, options.exec);
        outputs.write_csv("bifurcation_quantities.csv", [&](std::ostream& o) {
            csv::write_bifurcation_quantities(o, q, compute_R0(at_critical));
        });
        outputs.write_csv("bifurcation_sweep.csv", [&](std::ostream& o) {
            csv::write_bifurcation_sweep(o, sweep);
        });
        break;
    }
    case Command::heatmap: {
        const auto grid = heat_grid(params, options.grid_x, options.grid_y, options.exec);
        outputs.write_csv("heatmap.csv", [&](std::ostream& o) {
            csv::write_heat_grid(o, grid);
        });
        break;
    }
    case Command::interventions: {
        const auto& levels = options.levels.empty() ? config.interventions.levels : options.levels;
        const auto tables  = effectiveness_table(params, wh.params, levels, setup, options.exec);
        outputs.write_csv("effectiveness.csv", [&](std::ostream& o) {
            csv::write_effectiveness(o, tables);
        });
        break;
    }
    case Command::influence: {
        const auto values = options.knob_values.empty() ? default_knob_values(options.knob) : options.knob_values;
        InfluenceOptions io;
        io.horizon    = bh.horizon;
        io.initial    = bh.initial;
        io.coupling   = setup;
        io.integrator = config.coupling.integrator;
        const auto runs = within_host_influence(wh.params, params, options.knob, values, io, options.exec);
        outputs.write_csv("influence.csv", [&](std::ostream& o) {
            csv::write_influence(o, options.knob, runs);
        });
        break;
    }
    }

    const auto normalized = to_ini(config);
    outputs.write("config.normalized.ini", normalized);

    nlohmann::json manifest;
    manifest["tool"]    = "nestedepi";
    manifest["version"] = NESTEDEPI_VERSION;
    manifest["command"] = std::string(to_string(command));
    manifest["inputs"]  = {
        {"config_sha256", sha256_hex(options.config_source)},
        {"normalized_config_sha256", sha256_hex(normalized)},
        {"overrides", options.overrides},
    };
    manifest["execution"] = options.exec == Execution::serial ? "serial" : "parallel";
    manifest["libraries"] = {
        {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                      std::to_string(EIGEN_MINOR_VERSION)},
        {"boost", BOOST_LIB_VERSION},
        {"openssl", OPENSSL_VERSION_TEXT},
        {"compiler", __VERSION__},
    };
    manifest["started"]  = utc_timestamp(started);
    manifest["finished"] = utc_timestamp(std::chrono::system_clock::now());
    manifest["outputs"]  = outputs.manifest_entries();
    outputs.write("manifest.json", manifest.dump(2) + "\n");

    return {outputs.paths()};
}

int exit_status_for(const std::exception& e)
{
    if (dynamic_cast<const ParameterError*>(&e) || dynamic_cast<const ConfigError*>(&e)) {
        return 1;
    }
    if (dynamic_cast<const NumericalError*>(&e)) {
        return 2;
    }
    if (dynamic_cast<const IoError*>(&e)) {
        return 3;
    }
    return 4;
}

int run_cli(Command command, const fs::path& config_path, RunOptions options, std::ostream& err)
{
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                throw IoError("cannot open config file " + config_path.string());
            }
            std::ostringstream text;
            text << in.rdbuf();
            options.config_source = text.str();
        }
        const auto config = parse_config(options.config_source, options.overrides);
        if (options.out_dir.empty()) {
            const char* env = std::getenv("NESTEDEPI_OUT");
            options.out_dir = !config.output.directory.empty() ? fs::path(config.output.directory)
                              : env && *env                    ? fs::path(env)
                                                               : fs::path("out");
        }
        run_subcommand(command, config, options);
        return 0;
    }
    catch (const ConfigError& e) {
        err << "nestedepi: config error";
        if (e.line() > 0) {
            err << " (line " << e.line() << ")";
        }
        err << ": " << e.what() << '\n';
        return 1;
    }
    catch (const ParameterError& e) {
        err << "nestedepi: invalid " << e.field() << ": " << e.what() << '\n';
        return 1;
    }
    catch (const std::exception& e) {
        err << "nestedepi: " << e.what() << '\n';
        return exit_status_for(e);
    }
}

} // namespace nestedepi
