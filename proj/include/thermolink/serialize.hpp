#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "thermolink/constants.hpp"
#include "thermolink/sweep.hpp"

namespace thermolink {

/// Locale-independent scientific formatting, 17 significant digits, so that
/// serialized sweeps are byte-stable.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

inline std::string join_warnings(const std::vector<std::string>& warnings) {
    std::string out;
    for (std::size_t i = 0; i < warnings.size(); ++i) {
        if (i) out += ';';
        out += warnings[i];
    }
    return out;
}

/// Fixed-format CSV: variable,thermo_bps,shannon_bps,lower_bps,upper_bps,warnings.
inline std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
    std::string out = "variable,thermo_bps,shannon_bps,lower_bps,upper_bps,warnings\n";
    for (const auto& r : records) {
        out += format_double(r.variable_value);
        out += ',';
        out += format_double(r.capacity.thermo_capacity);
        out += ',';
        out += format_double(r.capacity.shannon_reference);
        out += ',';
        out += format_double(r.capacity.lower_bound);
        out += ',';
        out += format_double(r.capacity.upper_bound);
        out += ',';
        out += join_warnings(r.capacity.warnings);
        out += '\n';
    }
    return out;
}

inline nlohmann::ordered_json scenario_to_json(const Scenario& s) {
    return nlohmann::ordered_json{
        {"n_t", s.n_t},
        {"n_r", s.n_r},
        {"bandwidth_hz", s.bandwidth},
        {"symbol_period_s", s.symbol_period},
        {"modulation", to_string(s.modulation)},
        {"total_signal_power_w", s.effective_signal_power()},
        {"snr_db", s.snr_db},
        {"coding_overhead", s.coding_overhead},
        {"noise_temperature_k", s.noise_temperature},
        {"noise_dof_per_branch", s.noise_dof_per_branch},
        {"noise_pool_temperature_k", s.noise_pool_temperature},
        {"channel_mode", s.channel_mode == ChannelMode::unit_gain ? "unit_gain" : "rayleigh"},
        {"seed", s.seed},
    };
}

/// JSON document embedding the full sweep configuration for provenance.
inline std::string sweep_to_json(const SweepSpec& spec,
                                 const std::vector<SweepRecord>& records) {
    nlohmann::ordered_json doc;
    doc["library_version"] = version;
    doc["config"] = {
        {"scenario", scenario_to_json(spec.base)},
        {"variable", to_string(spec.variable)},
        {"grid_points", spec.grid.size()},
        {"grid_min", spec.grid.front()},
        {"grid_max", spec.grid.back()},
    };
    auto& rows = doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json row{
            {"variable", r.variable_value},
            {"thermo_bps", r.capacity.thermo_capacity},
            {"shannon_bps", r.capacity.shannon_reference},
            {"lower_bps", r.capacity.lower_bound},
            {"upper_bps", r.capacity.upper_bound},
        };
        if (!r.capacity.warnings.empty()) row["warnings"] = r.capacity.warnings;
        if (r.energy_per_bit_direct) row["energy_per_bit_j"] = *r.energy_per_bit_direct;
        rows.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

}  // namespace thermolink
