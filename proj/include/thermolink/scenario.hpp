#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>

#include "thermolink/capacity.hpp"
#include "thermolink/channel.hpp"
#include "thermolink/constants.hpp"
#include "thermolink/error.hpp"

namespace thermolink {

enum class Modulation { BPSK, QPSK, QAM16, QAM64, QAM256 };

inline double bits_per_symbol(Modulation m) {
    switch (m) {
        case Modulation::BPSK: return 1.0;
        case Modulation::QPSK: return 2.0;
        case Modulation::QAM16: return 4.0;
        case Modulation::QAM64: return 6.0;
        case Modulation::QAM256: return 8.0;
    }
    throw validation_error("unknown modulation");
}

inline Modulation modulation_from_string(const std::string& s) {
    if (s == "BPSK" || s == "bpsk") return Modulation::BPSK;
    if (s == "QPSK" || s == "qpsk") return Modulation::QPSK;
    if (s == "16QAM" || s == "16qam") return Modulation::QAM16;
    if (s == "64QAM" || s == "64qam") return Modulation::QAM64;
    if (s == "256QAM" || s == "256qam") return Modulation::QAM256;
    throw validation_error("unknown modulation: " + s);
}

inline std::string to_string(Modulation m) {
    switch (m) {
        case Modulation::BPSK: return "BPSK";
        case Modulation::QPSK: return "QPSK";
        case Modulation::QAM16: return "16QAM";
        case Modulation::QAM64: return "64QAM";
        case Modulation::QAM256: return "256QAM";
    }
    return "?";
}

enum class ChannelMode { unit_gain, rayleigh };

/// High-level link scenario, translated into per-branch parameters by
/// to_link_spec(). The default-constructed value is the standard simulation
/// preset: 64QAM, 128x4 antennas, 20 MHz, room temperature, 10 dB per-branch
/// SNR.
struct Scenario {
    std::size_t n_t = 128;
    std::size_t n_r = 4;
    double bandwidth = 20e6;          // Hz
    double symbol_period = 1.0 / 20e6; // s, one symbol per 1/B (Nyquist)
    Modulation modulation = Modulation::QAM64;
    double total_signal_power = 0.0;  // W; 0 means "derive from snr_db"
    double snr_db = 10.0;             // per-branch S/N used when power not given
    double coding_overhead = 0.2;     // psi = M_FEC / M_S
    double noise_temperature = 298.15;      // T_N, K
    double noise_dof_per_branch = 100.0;    // M_N, bits
    double noise_pool_temperature = 298.15; // T_LO, K
    ChannelMode channel_mode = ChannelMode::unit_gain;
    std::uint64_t seed = 1;

    void validate() const {
        if (n_t < 1 || n_r < 1) throw validation_error("antenna counts must be >= 1");
        if (!(bandwidth > 0.0)) throw validation_error("bandwidth must be > 0");
        if (!(symbol_period > 0.0)) throw validation_error("symbol period must be > 0");
        if (!(coding_overhead >= 0.0)) throw validation_error("coding overhead must be >= 0");
        if (!(noise_temperature > 0.0)) throw validation_error("noise temperature must be > 0");
        if (!(noise_dof_per_branch > 0.0)) throw validation_error("noise DOF must be > 0");
        if (!(noise_pool_temperature > 0.0))
            throw validation_error("noise pool temperature must be > 0");
        if (total_signal_power < 0.0) throw validation_error("signal power must be >= 0");
    }

    /// Per-branch noise power k_B T_N B, W.
    double branch_noise_power() const {
        return constants.k_B * noise_temperature * bandwidth;
    }

    /// Total signal power, either as given or derived from snr_db so that
    /// each of the min(n_t, n_r) branches sees S/N = 10^(snr_db/10).
    double effective_signal_power() const {
        if (total_signal_power > 0.0) return total_signal_power;
        const double n = static_cast<double>(std::min(n_t, n_r));
        return std::pow(10.0, snr_db / 10.0) * branch_noise_power() * n;
    }
};

/// The standard simulation preset.
inline Scenario table1_preset() { return Scenario{}; }

/// Translate a Scenario into per-branch link parameters: equal power split
/// across the min(n_t, n_r) eigen-branches, FEC power and DOF scaled by the
/// coding overhead, noise power k_B T_N B, source DOF from the modulation's
/// bits per symbol at symbol rate B. In rayleigh mode each branch's SNR is
/// multiplied by the squared eigenmode gain (applied to the noise
/// denominator so transmit power stays conserved).
inline LinkSpec scenario_to_link_spec(const Scenario& s) {
    s.validate();
    const std::size_t n = std::min(s.n_t, s.n_r);
    const double psi = s.coding_overhead;
    const double signal_power = s.effective_signal_power() / static_cast<double>(n);
    const double fec_power = psi * signal_power;
    const double noise_power = s.branch_noise_power();
    const double signal_dof = bits_per_symbol(s.modulation) * s.bandwidth * s.symbol_period;
    const double fec_dof = psi * signal_dof;

    // Eq-4 temperature of the transmitted signal; psi cancels because FEC
    // bits carry the same energy per DOF as source bits.
    const double branch_energy = (signal_power + fec_power) * s.symbol_period;
    const double signal_temperature =
        branch_energy > 0.0
            ? branch_energy / (constants.bit_factor * (signal_dof + fec_dof))
            : s.noise_temperature;  // zero-power edge: temperature is moot, keep it valid

    std::vector<double> gain2(n, 1.0);
    if (s.channel_mode == ChannelMode::rayleigh) {
        const auto gains = eigenmode_gains(generate_channel(s.n_t, s.n_r, s.seed));
        for (std::size_t i = 0; i < n; ++i) {
            const double g2 = gains[i] * gains[i];
            if (!(g2 > 1e-300))
                throw domain_error("eigenmode gain vanishes; channel is rank deficient");
            gain2[i] = g2;
        }
    }

    LinkSpec spec;
    spec.bandwidth = s.bandwidth;
    spec.symbol_period = s.symbol_period;
    spec.n_t = s.n_t;
    spec.n_r = s.n_r;
    spec.branches.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& b = spec.branches[i];
        b.signal_power = signal_power;
        b.fec_power = fec_power;
        b.noise_power = noise_power / gain2[i];
        b.signal_dof = signal_dof;
        b.fec_dof = fec_dof;
        b.noise_dof = s.noise_dof_per_branch;
        b.signal_temperature = signal_temperature;
        b.noise_temperature = s.noise_temperature;
    }
    spec.validate();
    return spec;
}

/// Receiver-side decode setup assembled from a scenario: the detector's
/// aggregate input (energy over one symbol period, at the conservation-fixed
/// T_HI) and one decode branch per subchannel at the transmit signal
/// temperature, with output energy fixed by the branch's share of the decode
/// entropy balance.
struct DecodeSetup {
    ThermoQuantity received;
    std::vector<DecodeBranch> outputs;
    double noise_pool_temperature = 0.0;
};

inline DecodeSetup scenario_decode_setup(const Scenario& s) {
    const LinkSpec spec = scenario_to_link_spec(s);
    const double tau = spec.symbol_period;
    double total_energy = 0.0;
    for (const auto& b : spec.branches)
        total_energy += (b.signal_power + b.fec_power + b.noise_power) * tau;
    const double t_hi = detector_temperature(total_energy, spec.branches, spec.branches, tau);
    const double t_lo = s.noise_pool_temperature;
    if (!(t_lo < t_hi))
        throw domain_error("noise pool temperature is not below the detector temperature");

    DecodeSetup d;
    d.received = thermo_quantity(total_energy, t_hi);
    d.noise_pool_temperature = t_lo;
    d.outputs.reserve(spec.branches.size());
    const double u_branch = total_energy / static_cast<double>(spec.branches.size());
    for (const auto& b : spec.branches) {
        const double t_o = b.signal_temperature;
        const double u_o = u_branch * t_o * (t_hi - t_lo) / (t_hi * (t_lo + t_o));
        d.outputs.push_back(DecodeBranch::from_energy_temperature(u_o, t_o));
    }
    return d;
}

}  // namespace thermolink
