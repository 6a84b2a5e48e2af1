#pragma once

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "thermolink/error.hpp"
#include "thermolink/scenario.hpp"
#include "thermolink/sweep.hpp"

namespace thermolink {

/// Config file parse failure with 1-based line/column of the offending token.
class config_error : public std::runtime_error {
public:
    config_error(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

/// Parsed configuration: a Scenario plus optional sweep settings. Missing
/// keys keep the `table1` preset values.
struct ConfigFile {
    Scenario scenario = table1_preset();
    SweepVariable sweep_variable = SweepVariable::noise_dof;
    bool has_sweep_variable = false;
    double sweep_min = 0.0;
    double sweep_max = 0.0;
    std::size_t sweep_points = 0;
    bool sweep_log_scale = false;

    SweepSpec to_sweep_spec() const {
        if (!has_sweep_variable)
            throw validation_error("config has no sweep_variable");
        SweepSpec spec;
        spec.base = scenario;
        spec.variable = sweep_variable;
        spec.grid = sweep_log_scale ? log_grid(sweep_min, sweep_max, sweep_points)
                                    : linear_grid(sweep_min, sweep_max, sweep_points);
        spec.outputs = SweepOutputs{true, true, true, true, false};
        return spec;
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline double parse_number(std::string_view v, std::size_t line, std::size_t col) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(std::string(v), &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw config_error("expected a number, got '" + std::string(v) + "'", line, col);
    }
}

inline std::size_t parse_count(std::string_view v, std::size_t line, std::size_t col) {
    const double d = parse_number(v, line, col);
    if (d < 1.0 || d != static_cast<double>(static_cast<std::size_t>(d)))
        throw config_error("expected a positive integer, got '" + std::string(v) + "'",
                           line, col);
    return static_cast<std::size_t>(d);
}

}  // namespace detail

/// Parse the `key = value` config format. Unknown keys are rejected; keys not
/// present keep their preset defaults. `#` starts a comment.
inline ConfigFile parse_config(std::istream& in) {
    ConfigFile cfg;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (detail::trim(line).empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw config_error("expected 'key = value'", lineno, 1);
        const std::string key{detail::trim(line.substr(0, eq))};
        const std::string_view value = detail::trim(line.substr(eq + 1));
        const std::size_t vcol = eq + 2;
        if (key.empty()) throw config_error("empty key", lineno, 1);
        if (value.empty()) throw config_error("empty value for '" + key + "'", lineno, vcol);

        auto& s = cfg.scenario;
        if (key == "defaults") {
            if (value != "table1")
                throw config_error("unknown preset '" + std::string(value) + "'", lineno, vcol);
            s = table1_preset();
        } else if (key == "n_t") {
            s.n_t = detail::parse_count(value, lineno, vcol);
        } else if (key == "n_r") {
            s.n_r = detail::parse_count(value, lineno, vcol);
        } else if (key == "bandwidth_hz") {
            s.bandwidth = detail::parse_number(value, lineno, vcol);
            s.symbol_period = 1.0 / s.bandwidth;
        } else if (key == "symbol_period_s") {
            s.symbol_period = detail::parse_number(value, lineno, vcol);
        } else if (key == "modulation") {
            try {
                s.modulation = modulation_from_string(std::string(value));
            } catch (const validation_error& e) {
                throw config_error(e.what(), lineno, vcol);
            }
        } else if (key == "total_signal_power_w") {
            s.total_signal_power = detail::parse_number(value, lineno, vcol);
        } else if (key == "snr_db") {
            s.snr_db = detail::parse_number(value, lineno, vcol);
        } else if (key == "coding_overhead") {
            s.coding_overhead = detail::parse_number(value, lineno, vcol);
        } else if (key == "noise_temperature_k") {
            s.noise_temperature = detail::parse_number(value, lineno, vcol);
        } else if (key == "noise_dof_per_branch") {
            s.noise_dof_per_branch = detail::parse_number(value, lineno, vcol);
        } else if (key == "noise_pool_temperature_k") {
            s.noise_pool_temperature = detail::parse_number(value, lineno, vcol);
        } else if (key == "channel_mode") {
            if (value == "unit_gain") s.channel_mode = ChannelMode::unit_gain;
            else if (value == "rayleigh") s.channel_mode = ChannelMode::rayleigh;
            else throw config_error("unknown channel_mode '" + std::string(value) + "'",
                                    lineno, vcol);
        } else if (key == "seed") {
            s.seed = detail::parse_count(value, lineno, vcol);
        } else if (key == "sweep_variable") {
            if (value == "noise_dof") cfg.sweep_variable = SweepVariable::noise_dof;
            else if (value == "coding_overhead")
                cfg.sweep_variable = SweepVariable::coding_overhead;
            else throw config_error("unknown sweep_variable '" + std::string(value) + "'",
                                    lineno, vcol);
            cfg.has_sweep_variable = true;
        } else if (key == "sweep_min") {
            cfg.sweep_min = detail::parse_number(value, lineno, vcol);
        } else if (key == "sweep_max") {
            cfg.sweep_max = detail::parse_number(value, lineno, vcol);
        } else if (key == "sweep_points") {
            cfg.sweep_points = detail::parse_count(value, lineno, vcol);
        } else if (key == "sweep_scale") {
            if (value == "log") cfg.sweep_log_scale = true;
            else if (value == "linear") cfg.sweep_log_scale = false;
            else throw config_error("unknown sweep_scale '" + std::string(value) + "'",
                                    lineno, vcol);
        } else {
            throw config_error("unknown key '" + key + "'", lineno, 1);
        }
    }
    return cfg;
}

inline ConfigFile parse_config_string(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

}  // namespace thermolink
