// thermolink command line front end: single-shot capacity and per-bit energy
// reports plus deterministic parameter sweeps with CSV/JSON output.
//
// Exit codes: 0 ok, 2 config error, 3 domain error, 4 I/O error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "thermolink/thermolink.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct Overrides {
    std::optional<std::string> config_path;
    std::optional<double> snr_db;
    std::optional<double> psi;
    std::optional<std::string> noise_dof;
    std::optional<std::size_t> n_t;
    std::optional<std::size_t> n_r;
    std::optional<double> bandwidth;
    std::optional<double> noise_temp;
    std::optional<double> t_lo;
    std::optional<std::string> modulation;
    std::optional<std::string> channel_mode;
    std::optional<std::uint64_t> seed;
};

void add_common_options(CLI::App* cmd, Overrides& ov) {
    cmd->add_option("--config", ov.config_path, "Config file (key = value format)");
    cmd->add_option("--preset", [](const std::vector<std::string>& vals) {
        return vals.empty() || vals.front() == "table1";
    }, "Named preset (table1; also the default)");
    cmd->add_option("--snr-db", ov.snr_db, "Per-branch SNR in dB");
    cmd->add_option("--psi", ov.psi, "Coding overhead M_FEC/M_S");
    cmd->add_option("--noise-dof", ov.noise_dof, "Noise DOF per branch (number or 'inf')");
    cmd->add_option("--ntx", ov.n_t, "Transmit antennas");
    cmd->add_option("--nrx", ov.n_r, "Receive antennas");
    cmd->add_option("--bandwidth", ov.bandwidth, "Bandwidth in Hz");
    cmd->add_option("--noise-temp", ov.noise_temp, "Noise temperature T_N in K");
    cmd->add_option("--t-lo", ov.t_lo, "Noise pool temperature T_LO in K");
    cmd->add_option("--modulation", ov.modulation, "BPSK/QPSK/16QAM/64QAM/256QAM");
    cmd->add_option("--channel-mode", ov.channel_mode, "unit_gain or rayleigh");
    cmd->add_option("--seed", ov.seed, "Channel seed (rayleigh mode)");
}

thermolink::ConfigFile load_config(const Overrides& ov) {
    thermolink::ConfigFile cfg;
    if (ov.config_path) {
        std::ifstream in(*ov.config_path);
        if (!in) throw thermolink::config_error("cannot open '" + *ov.config_path + "'", 0, 0);
        cfg = thermolink::parse_config(in);
    }
    auto& s = cfg.scenario;
    if (ov.snr_db) { s.snr_db = *ov.snr_db; s.total_signal_power = 0.0; }
    if (ov.psi) s.coding_overhead = *ov.psi;
    if (ov.noise_dof) {
        if (*ov.noise_dof == "inf") {
            s.noise_dof_per_branch = INFINITY;
        } else {
            try {
                s.noise_dof_per_branch = std::stod(*ov.noise_dof);
            } catch (const std::exception&) {
                throw thermolink::config_error("bad --noise-dof value", 0, 0);
            }
        }
    }
    if (ov.n_t) s.n_t = *ov.n_t;
    if (ov.n_r) s.n_r = *ov.n_r;
    if (ov.bandwidth) { s.bandwidth = *ov.bandwidth; s.symbol_period = 1.0 / *ov.bandwidth; }
    if (ov.noise_temp) s.noise_temperature = *ov.noise_temp;
    if (ov.t_lo) s.noise_pool_temperature = *ov.t_lo;
    if (ov.modulation) s.modulation = thermolink::modulation_from_string(*ov.modulation);
    if (ov.channel_mode) {
        if (*ov.channel_mode == "unit_gain") s.channel_mode = thermolink::ChannelMode::unit_gain;
        else if (*ov.channel_mode == "rayleigh") s.channel_mode = thermolink::ChannelMode::rayleigh;
        else throw thermolink::config_error("bad --channel-mode value", 0, 0);
    }
    if (ov.seed) s.seed = *ov.seed;
    return cfg;
}

int write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return kExitIo;
        out << content;
        if (!out) return kExitIo;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) return kExitIo;
    return kExitOk;
}

unsigned thread_count_from_env() {
    const char* env = std::getenv("THERMOLINK_THREADS");
    if (!env) return 1;
    const long n = std::strtol(env, nullptr, 10);
    return n > 1 ? static_cast<unsigned>(n) : 1;
}

int cmd_capacity(const Overrides& ov, bool json_out) {
    const auto cfg = load_config(ov);
    const auto spec = thermolink::scenario_to_link_spec(cfg.scenario);
    const auto result = thermolink::thermo_capacity(spec);

    if (json_out) {
        nlohmann::ordered_json doc;
        doc["library_version"] = thermolink::version;
        doc["scenario"] = thermolink::scenario_to_json(cfg.scenario);
        doc["thermo_bps"] = result.thermo_capacity;
        doc["lower_bps"] = result.lower_bound;
        doc["upper_bps"] = result.upper_bound;
        doc["shannon_bps"] = result.shannon_reference;
        auto& branches = doc["per_branch"] = nlohmann::ordered_json::array();
        for (const auto& t : result.per_branch_terms)
            branches.push_back({{"snr_term_bps", t.snr_term}, {"dof_term_bps", t.dof_term}});
        doc["warnings"] = result.warnings;
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }

    using thermolink::format_double;
    std::cout << "thermo capacity  : " << format_double(result.thermo_capacity) << " bit/s\n"
              << "lower bound      : " << format_double(result.lower_bound) << " bit/s\n"
              << "upper bound      : " << format_double(result.upper_bound) << " bit/s\n"
              << "shannon reference: " << format_double(result.shannon_reference) << " bit/s\n";
    for (std::size_t i = 0; i < result.per_branch_terms.size(); ++i) {
        const auto& t = result.per_branch_terms[i];
        std::cout << "branch " << i << " : snr_term " << format_double(t.snr_term)
                  << "  dof_term " << format_double(t.dof_term) << "\n";
    }
    for (const auto& w : result.warnings) std::cout << "warning: " << w << "\n";
    return kExitOk;
}

int cmd_energy(const Overrides& ov, std::optional<double> t_hi_override) {
    const auto cfg = load_config(ov);
    auto setup = thermolink::scenario_decode_setup(cfg.scenario);
    if (t_hi_override)
        setup.received = thermolink::thermo_quantity(setup.received.energy, *t_hi_override);

    const double floor = thermolink::landauer_floor(setup.noise_pool_temperature);
    const auto e = thermolink::energy_per_bit(setup.received, setup.outputs,
                                              setup.noise_pool_temperature);

    using thermolink::format_double;
    std::cout << "direct         : " << format_double(e.direct) << " J/bit\n"
              << "closed form    : " << format_double(e.closed_form) << " J/bit\n"
              << "landauer floor : " << format_double(floor) << " J/bit\n"
              << "T_HI           : " << format_double(setup.received.temperature) << " K\n"
              << "T_LO           : " << format_double(setup.noise_pool_temperature) << " K\n";
    if (e.direct < floor)
        std::cout << "note: direct energy below the floor; inputs do not satisfy the "
                     "decode entropy balance\n";
    return kExitOk;
}

int run_and_write_sweep(const thermolink::SweepSpec& spec, const std::string& out_path,
                        const std::string& format) {
    const unsigned threads = thread_count_from_env();
    std::vector<thermolink::SweepRecord> records;
    try {
        records = thermolink::run_sweep(spec, threads);
    } catch (const thermolink::sweep_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        const std::string partial = format == "json"
            ? thermolink::sweep_to_json(spec, e.partial_records)
            : thermolink::sweep_to_csv(e.partial_records);
        write_file_atomic(out_path + ".partial", partial);
        return kExitDomain;
    }
    const std::string content = format == "json" ? thermolink::sweep_to_json(spec, records)
                                                 : thermolink::sweep_to_csv(records);
    const int rc = write_file_atomic(out_path, content);
    if (rc != kExitOk) std::cerr << "error: cannot write '" << out_path << "'\n";
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermodynamic MIMO link capacity and energy calculator"};
    app.require_subcommand(1);

    Overrides ov_cap, ov_energy, ov_sweep, ov_fig4, ov_fig5;
    bool json_out = false;
    std::optional<double> t_hi_override;
    std::string out_path, format = "csv";

    auto* cap = app.add_subcommand("capacity", "Single-shot capacity report");
    add_common_options(cap, ov_cap);
    cap->add_flag("--json", json_out, "Machine-readable output");

    auto* energy = app.add_subcommand("energy", "Per-bit dissipated energy report");
    add_common_options(energy, ov_energy);
    energy->add_option("--t-hi", t_hi_override, "Override detector temperature T_HI in K");

    auto* sweep = app.add_subcommand("sweep", "Run the sweep configured in the config file");
    add_common_options(sweep, ov_sweep);
    sweep->add_option("-o,--output", out_path, "Output file")->required();
    sweep->add_option("--format", format, "csv or json");

    auto* fig4 = app.add_subcommand("fig4", "Capacity vs noise DOF sweep");
    add_common_options(fig4, ov_fig4);
    fig4->add_option("-o,--output", out_path, "Output file")->required();
    fig4->add_option("--format", format, "csv or json");

    auto* fig5 = app.add_subcommand("fig5", "Capacity vs coding overhead sweep");
    add_common_options(fig5, ov_fig5);
    fig5->add_option("-o,--output", out_path, "Output file")->required();
    fig5->add_option("--format", format, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (format != "csv" && format != "json")
            throw thermolink::config_error("unknown format '" + format + "'", 0, 0);
        if (cap->parsed()) return cmd_capacity(ov_cap, json_out);
        if (energy->parsed()) return cmd_energy(ov_energy, t_hi_override);
        if (sweep->parsed()) {
            const auto cfg = load_config(ov_sweep);
            return run_and_write_sweep(cfg.to_sweep_spec(), out_path, format);
        }
        if (fig4->parsed()) {
            const auto cfg = load_config(ov_fig4);
            return run_and_write_sweep(thermolink::fig4_spec(cfg.scenario), out_path, format);
        }
        if (fig5->parsed()) {
            const auto cfg = load_config(ov_fig5);
            return run_and_write_sweep(thermolink::fig5_spec(cfg.scenario), out_path, format);
        }
    } catch (const thermolink::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const thermolink::validation_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const thermolink::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
