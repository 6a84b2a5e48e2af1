#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "thermolink/constants.hpp"
#include "thermolink/error.hpp"

namespace thermolink {

/// A thermodynamic state: energy U (J), temperature T (K), degrees of
/// freedom M (bits) and entropy H (J/K), tied together by H = U/T = k_B M ln 2.
struct ThermoQuantity {
    double energy = 0.0;       // J
    double temperature = 0.0;  // K
    double dof = 0.0;          // bits
    double entropy = 0.0;      // J/K
};

/// Build a ThermoQuantity from energy and temperature.
inline ThermoQuantity thermo_quantity(double energy, double temperature) {
    if (!(temperature > 0.0))
        throw domain_error("temperature must be positive, got " + std::to_string(temperature));
    if (!(energy >= 0.0))
        throw domain_error("energy must be nonnegative, got " + std::to_string(energy));
    ThermoQuantity q;
    q.energy = energy;
    q.temperature = temperature;
    q.entropy = energy / temperature;
    q.dof = energy / (constants.bit_factor * temperature);
    return q;
}

/// Inverse constructor: from DOF and temperature.
inline ThermoQuantity thermo_quantity_from_dof_temperature(double dof, double temperature) {
    if (!(temperature > 0.0))
        throw domain_error("temperature must be positive");
    if (!(dof >= 0.0))
        throw domain_error("dof must be nonnegative");
    return thermo_quantity(constants.bit_factor * dof * temperature, temperature);
}

/// Inverse constructor: from DOF and energy.
inline ThermoQuantity thermo_quantity_from_dof_energy(double dof, double energy) {
    if (!(dof > 0.0))
        throw domain_error("dof must be positive to recover a temperature");
    if (!(energy >= 0.0))
        throw domain_error("energy must be nonnegative");
    return thermo_quantity(energy, energy / (constants.bit_factor * dof));
}

/// One transmit/receive antenna branch. Powers in W, temperatures in K,
/// DOF counts in bits.
struct BranchParams {
    double signal_power = 0.0;       // S_i
    double fec_power = 0.0;          // P_i^FEC
    double noise_power = 0.0;        // N_i
    double signal_dof = 0.0;         // M_i^S
    double fec_dof = 0.0;            // M_i^FEC
    double noise_dof = 0.0;          // M_i^N
    double signal_temperature = 0.0; // T_i
    double noise_temperature = 0.0;  // T_i^N

    void validate() const {
        if (!(signal_power >= 0.0)) throw validation_error("signal_power must be >= 0");
        if (!(fec_power >= 0.0)) throw validation_error("fec_power must be >= 0");
        if (!(noise_power > 0.0)) throw validation_error("noise_power must be > 0");
        if (!(signal_dof >= 0.0)) throw validation_error("signal_dof must be >= 0");
        if (!(fec_dof >= 0.0)) throw validation_error("fec_dof must be >= 0");
        if (!(noise_dof > 0.0)) throw validation_error("noise_dof must be > 0");
        if (!(signal_temperature > 0.0)) throw validation_error("signal_temperature must be > 0");
        if (!(noise_temperature > 0.0)) throw validation_error("noise_temperature must be > 0");
    }
};

/// One decoded output branch at the receiver.
struct DecodeBranch {
    double output_energy = 0.0;       // U_j^O, J
    double output_temperature = 0.0;  // T_j^O, K
    double output_dof = 0.0;          // M_j^O, bits

    void validate() const {
        if (!(output_energy >= 0.0)) throw validation_error("output_energy must be >= 0");
        if (!(output_temperature > 0.0)) throw validation_error("output_temperature must be > 0");
    }

    /// Branch with DOF derived from energy and temperature.
    static DecodeBranch from_energy_temperature(double energy, double temperature) {
        DecodeBranch b{energy, temperature, 0.0};
        b.validate();
        b.output_dof = energy / (constants.bit_factor * temperature);
        return b;
    }
};

/// Total DOF sent by all transmit branches: sum of (S_i + P_i^FEC) tau over
/// k_B T_i ln 2.
inline double total_send_dof(std::span<const BranchParams> branches, double tau) {
    if (branches.empty()) throw validation_error("branch list is empty");
    if (!(tau > 0.0)) throw domain_error("symbol period must be positive");
    double dof = 0.0;
    for (const auto& b : branches) {
        b.validate();
        dof += (b.signal_power + b.fec_power) * tau /
               (constants.bit_factor * b.signal_temperature);
    }
    return dof;
}

/// Total DOF injected by channel noise: sum of N_j tau over k_B T_j^N ln 2.
inline double total_noise_dof(std::span<const BranchParams> branches, double tau) {
    if (branches.empty()) throw validation_error("branch list is empty");
    if (!(tau > 0.0)) throw domain_error("symbol period must be positive");
    double dof = 0.0;
    for (const auto& b : branches) {
        b.validate();
        dof += b.noise_power * tau / (constants.bit_factor * b.noise_temperature);
    }
    return dof;
}

/// Detector temperature T_HI, fixed by DOF conservation: the detector sees
/// total energy U at whatever temperature makes its DOF equal the sum of all
/// transmitted and noise DOF. An empty noise list models the zero-noise limit.
inline double detector_temperature(double total_energy,
                                   std::span<const BranchParams> send_branches,
                                   std::span<const BranchParams> noise_branches,
                                   double tau) {
    if (!(total_energy > 0.0)) throw domain_error("total energy must be positive");
    double dof = total_send_dof(send_branches, tau);
    if (!noise_branches.empty()) dof += total_noise_dof(noise_branches, tau);
    if (!(dof > 0.0)) throw domain_error("total degrees of freedom are zero");
    return total_energy / (constants.bit_factor * dof);
}

struct DetectorTemperatureLimits {
    double low_snr = 0.0;   // K, noise-dominated limit
    double high_snr = 0.0;  // K, signal-dominated limit
};

/// Asymptotes of T_HI: with signal energies zeroed (noise only) and with
/// noise energies zeroed (signal only). The energy-weighted harmonic
/// structure of T_HI brackets it between these two.
inline DetectorTemperatureLimits detector_temperature_limits(
    std::span<const BranchParams> send_branches,
    std::span<const BranchParams> noise_branches,
    double tau) {
    if (send_branches.empty() || noise_branches.empty())
        throw validation_error("branch lists must be non-empty");
    double send_energy = 0.0;
    for (const auto& b : send_branches) send_energy += (b.signal_power + b.fec_power) * tau;
    double noise_energy = 0.0;
    for (const auto& b : noise_branches) noise_energy += b.noise_power * tau;

    DetectorTemperatureLimits lim;
    lim.low_snr = noise_energy / (constants.bit_factor * total_noise_dof(noise_branches, tau));
    lim.high_snr = send_energy / (constants.bit_factor * total_send_dof(send_branches, tau));
    return lim;
}

struct DecodeBalance {
    double noise_sink_dof = 0.0;     // bits flowing into the noise pool
    double entropy_residual = 0.0;   // relative residual of H_U = sum H_O + H_NS
    bool balanced = false;           // residual within 1e-9
};

/// Entropy bookkeeping of the decode step: whatever energy the outputs do not
/// absorb flows into the noise pool at T_LO. Returns the sink DOF together
/// with the residual of the entropy balance H_U = sum H_O + H_NS.
inline DecodeBalance decode_entropy_balance(const ThermoQuantity& received,
                                            std::span<const DecodeBranch> outputs,
                                            double noise_pool_temperature) {
    if (!(noise_pool_temperature > 0.0))
        throw domain_error("noise pool temperature must be positive");
    double out_energy = 0.0;
    double out_entropy = 0.0;
    for (const auto& o : outputs) {
        o.validate();
        out_energy += o.output_energy;
        out_entropy += o.output_energy / o.output_temperature;
    }
    if (out_energy > received.energy * (1.0 + 1e-12))
        throw conservation_error("decode outputs carry more energy than received");

    DecodeBalance r;
    const double sink_energy = std::max(received.energy - out_energy, 0.0);
    r.noise_sink_dof = sink_energy / (constants.bit_factor * noise_pool_temperature);
    const double sink_entropy = sink_energy / noise_pool_temperature;
    const double lhs = received.entropy;
    const double rhs = out_entropy + sink_entropy;
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    r.entropy_residual = scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
    r.balanced = r.entropy_residual <= 1e-9;
    return r;
}

/// Carnot efficiency 1 - T_LO/T_HI, in [0, 1).
inline double carnot_efficiency(double t_lo, double t_hi) {
    if (!(t_lo > 0.0)) throw domain_error("T_LO must be positive");
    if (t_lo > t_hi)
        throw domain_error("T_LO exceeds T_HI; the model requires a hot detector");
    return 1.0 - t_lo / t_hi;
}

struct EnergyPerBit {
    double direct = 0.0;       // J/bit, sink heat over output DOF
    double closed_form = 0.0;  // J/bit, expression in T_LO, T_HI, T_j^O
};

/// Dissipated energy per decoded bit. `direct` divides the heat flowing into
/// the noise pool by the decoded DOF; `closed_form` is the temperature-ratio
/// expression. The two coincide on inputs satisfying the decode entropy
/// balance with outputs entering with sign -T_j^O; elsewhere they differ and
/// both are reported.
inline EnergyPerBit energy_per_bit(const ThermoQuantity& received,
                                   std::span<const DecodeBranch> outputs,
                                   double noise_pool_temperature) {
    if (!(noise_pool_temperature > 0.0))
        throw domain_error("noise pool temperature must be positive");
    const double t_hi = received.temperature;
    if (!(noise_pool_temperature < t_hi))
        throw domain_error("T_LO must be below the detector temperature T_HI");

    double out_energy = 0.0;
    double out_dof = 0.0;
    double out_temp_sum = 0.0;
    for (const auto& o : outputs) {
        o.validate();
        out_energy += o.output_energy;
        out_dof += o.output_dof;
        out_temp_sum += o.output_temperature;
    }
    if (!(out_dof > 0.0)) throw domain_error("decode outputs carry zero DOF");
    if (out_energy > received.energy * (1.0 + 1e-12))
        throw conservation_error("decode outputs carry more energy than received");

    const double n_branches = static_cast<double>(outputs.size());
    EnergyPerBit e;
    e.direct = (received.energy - out_energy) / out_dof;
    e.closed_form = (1.0 + out_temp_sum / (n_branches * t_hi)) /
                    (1.0 - noise_pool_temperature / t_hi) *
                    constants.bit_factor * noise_pool_temperature;
    return e;
}

/// Landauer floor k_B T ln 2, J/bit.
inline double landauer_floor(double temperature) {
    if (!(temperature > 0.0)) throw domain_error("temperature must be positive");
    return constants.bit_factor * temperature;
}

}  // namespace thermolink
