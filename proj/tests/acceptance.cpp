// Acceptance suite: one pass/fail line per criterion. Exits nonzero if any
// criterion fails. argv[1] must be the path to the CLI binary (used by the
// determinism criterion).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thermolink/thermolink.hpp"

using namespace thermolink;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << index << ": " << name;
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

bool rel_close(double a, double b, double tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 || std::abs(a - b) / scale <= tol;
}

// 1. Landauer floor: value at 298.15 K, and no randomized decode scenario
// with T_HI >= max(T_O, T_LO) dips below it.
void criterion_landauer() {
    bool ok = rel_close(landauer_floor(298.15), 2.852e-21, 1e-3);
    std::string detail;
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10000 && ok; ++i) {
        const auto s = oracles::make_signed_balance_scenario(rng, 1 + i % 4);
        double max_t_o = 0.0;
        for (const auto& o : s.outputs) max_t_o = std::max(max_t_o, o.output_temperature);
        if (s.received.temperature < max_t_o || s.received.temperature < s.t_lo) continue;
        const auto e = energy_per_bit(s.received, s.outputs, s.t_lo);
        if (e.direct < landauer_floor(s.t_lo) * (1.0 - 1e-12)) {
            ok = false;
            detail = "direct " + std::to_string(e.direct) + " below floor at trial " +
                     std::to_string(i);
        }
    }
    report(1, "Landauer floor", ok, detail);
}

// 2. Direct detector temperature agrees with the nested product-form oracle.
void criterion_product_form() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> unt(1, 6), unr(1, 4);
    std::uniform_real_distribution<double> ue(1e-16, 1e-13);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 1000 && ok; ++i) {
        std::vector<BranchParams> send, noise;
        const int nt = unt(rng), nr = unr(rng);
        for (int k = 0; k < nt; ++k) send.push_back(oracles::random_branch(rng));
        for (int k = 0; k < nr; ++k) noise.push_back(oracles::random_branch(rng));
        const double u = ue(rng);
        const double direct = detector_temperature(u, send, noise, 1.0);
        const double oracle = oracles::product_form_detector_temperature(u, send, noise, 1.0);
        if (!rel_close(direct, oracle, 1e-6)) {
            ok = false;
            detail = "trial " + std::to_string(i);
        }
    }
    report(2, "detector temperature product-form oracle", ok, detail);
}

// 3. Scaling signal energies by 1e6 (1e-6) drives T_HI to the high- (low-)
// SNR asymptote within 0.1%.
void criterion_asymptotes() {
    std::mt19937_64 rng(13);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 200 && ok; ++i) {
        std::vector<BranchParams> send, noise;
        for (int k = 0; k < 4; ++k) send.push_back(oracles::random_branch(rng));
        for (int k = 0; k < 3; ++k) noise.push_back(oracles::random_branch(rng));
        const auto limits = detector_temperature_limits(send, noise, 1.0);

        for (double scale : {1e6, 1e-6}) {
            auto scaled = send;
            for (auto& b : scaled) {
                b.signal_power *= scale;
                b.fec_power *= scale;
            }
            double u = 0.0;
            for (const auto& b : scaled) u += b.signal_power + b.fec_power;
            for (const auto& b : noise) u += b.noise_power;
            const double t = detector_temperature(u, scaled, noise, 1.0);
            const double target = scale > 1.0 ? limits.high_snr : limits.low_snr;
            if (std::abs(t - target) / target > 1e-3) {
                ok = false;
                detail = "scale " + std::to_string(scale) + " trial " + std::to_string(i);
            }
        }
    }
    report(3, "detector temperature asymptotes", ok, detail);
}

// 4. C_LO <= C <= C_HI on random positive-ratio specs, tight at n = 1.
void criterion_sandwich() {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> un(1, 8);
    std::uniform_real_distribution<double> uratio(1e-3, 1e3);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        const int n = un(rng);
        LinkSpec spec;
        spec.bandwidth = 1.0;
        spec.symbol_period = 1.0;
        spec.n_t = spec.n_r = static_cast<std::size_t>(n);
        for (int i = 0; i < n; ++i) {
            BranchParams b;
            b.noise_power = 1e-13;
            b.signal_power = uratio(rng) * b.noise_power;
            b.noise_dof = 1.0;
            b.signal_dof = uratio(rng);
            b.signal_temperature = 300.0;
            b.noise_temperature = 298.15;
            spec.branches.push_back(b);
        }
        const auto r = thermo_capacity(spec);
        const double slack = 1e-9 * std::max(1.0, std::abs(r.thermo_capacity));
        if (r.lower_bound > r.thermo_capacity + slack ||
            r.thermo_capacity > r.upper_bound + slack) {
            ok = false;
            detail = "sandwich broken at trial " + std::to_string(trial);
        }
        if (n == 1 && (!rel_close(r.lower_bound, r.thermo_capacity, 1e-9) ||
                       !rel_close(r.upper_bound, r.thermo_capacity, 1e-9))) {
            ok = false;
            detail = "bounds not tight at n=1, trial " + std::to_string(trial);
        }
    }
    report(4, "capacity bound sandwich", ok, detail);
}

// 5. Noise-DOF sweep: strictly increasing, minimum at M_N = 1, final point
// within 1% of the Shannon-form value.
void criterion_fig4() {
    const auto records = fig4_sweep(table1_preset());
    bool ok = records.size() >= 50 && records.front().variable_value == 1.0;
    std::string detail = ok ? "" : "grid shape";
    for (std::size_t i = 1; i < records.size() && ok; ++i) {
        if (!(records[i].capacity.thermo_capacity >
              records[i - 1].capacity.thermo_capacity)) {
            ok = false;
            detail = "not strictly increasing at point " + std::to_string(i);
        }
    }
    if (ok) {
        for (const auto& r : records)
            if (r.capacity.thermo_capacity < records.front().capacity.thermo_capacity) {
                ok = false;
                detail = "minimum not at M_N = 1";
            }
    }
    if (ok) {
        const auto& last = records.back().capacity;
        if (std::abs(last.thermo_capacity - last.shannon_reference) >
            0.01 * last.shannon_reference) {
            ok = false;
            detail = "final point not within 1% of the Shannon value";
        }
    }
    report(5, "noise-DOF sweep trend", ok, detail);
}

// 6. Coding-overhead sweep: increasing, diminishing returns, strictly below
// the Shannon-form value, bounds hold row-wise.
void criterion_fig5() {
    const auto records = fig5_sweep(table1_preset());
    bool ok = records.size() >= 40;
    std::string detail = ok ? "" : "grid shape";
    std::vector<double> c;
    for (const auto& r : records) c.push_back(r.capacity.thermo_capacity);
    for (std::size_t i = 1; i < c.size() && ok; ++i)
        if (!(c[i] > c[i - 1])) { ok = false; detail = "not increasing"; }
    for (std::size_t i = 2; i < c.size() && ok; ++i) {
        const double d2 = (c[i] - c[i - 1]) - (c[i - 1] - c[i - 2]);
        if (d2 > 1e-6 * c[i]) { ok = false; detail = "second differences positive"; }
    }
    for (const auto& r : records) {
        if (!ok) break;
        if (!(r.capacity.thermo_capacity < r.capacity.shannon_reference)) {
            ok = false;
            detail = "thermo not strictly below shannon";
        }
        const double slack = 1e-9 * r.capacity.shannon_reference;
        if (r.capacity.lower_bound > r.capacity.thermo_capacity + slack ||
            r.capacity.thermo_capacity > r.capacity.upper_bound + slack) {
            ok = false;
            detail = "bound sandwich broken";
        }
    }
    report(6, "coding-overhead sweep trend", ok, detail);
}

// 7. Conservation identities: DOF balance, decode entropy balance, and the
// Carnot relation on balance-satisfying scenarios.
void criterion_conservation() {
    std::mt19937_64 rng(29);
    bool ok = true;
    std::string detail;

    std::uniform_real_distribution<double> ue(1e-16, 1e-13);
    for (int i = 0; i < 1000 && ok; ++i) {
        std::vector<BranchParams> send, noise;
        for (int k = 0; k < 4; ++k) send.push_back(oracles::random_branch(rng));
        for (int k = 0; k < 2; ++k) noise.push_back(oracles::random_branch(rng));
        const double u = ue(rng);
        const double t_hi = detector_temperature(u, send, noise, 1.0);
        const double dof = total_send_dof(send, 1.0) + total_noise_dof(noise, 1.0);
        if (!rel_close(u / t_hi, constants.bit_factor * dof, 1e-9)) {
            ok = false;
            detail = "DOF balance, trial " + std::to_string(i);
        }
    }
    for (int i = 0; i < 1000 && ok; ++i) {
        const auto s = oracles::make_carnot_scenario(rng, 1 + i % 4);
        const auto bal = decode_entropy_balance(s.received, s.outputs, s.t_lo);
        if (bal.entropy_residual > 1e-9) {
            ok = false;
            detail = "entropy balance residual, trial " + std::to_string(i);
        }
        double m_o = 0.0;
        for (const auto& o : s.outputs) m_o += o.output_dof;
        const double eta = carnot_efficiency(s.t_lo, s.received.temperature);
        if (!rel_close(m_o, eta * bal.noise_sink_dof, 1e-6)) {
            ok = false;
            detail = "Carnot relation, trial " + std::to_string(i);
        }
    }
    report(7, "conservation identities", ok, detail);
}

// 8. The per-branch DOF-rate contribution equals the quadrature of
// (tau B / ln 2) dT/T from the noise temperature to the aggregate
// signal-plus-noise temperature.
void criterion_derivation() {
    Scenario s = table1_preset();
    s.n_t = s.n_r = 1;
    const auto spec = scenario_to_link_spec(s);
    const auto& b = spec.branches[0];
    const double tau = spec.symbol_period;
    const double bw = spec.bandwidth;

    const double u_total = (b.signal_power + b.fec_power + b.noise_power) * tau;
    const double t_ip = u_total /
        (constants.k_B * (b.signal_dof + b.fec_dof + b.noise_dof) * M_LN2);
    const double t_n = b.noise_power * tau /
        (constants.k_B * b.noise_dof * M_LN2);

    const double integral = oracles::simpson(
        [&](double t) { return tau * bw / (M_LN2 * t); }, t_n, t_ip, 4096);

    const auto r = thermo_capacity(spec);
    const double branch_bits = (r.per_branch_terms[0].snr_term -
                                r.per_branch_terms[0].dof_term) * tau;
    const bool ok = rel_close(integral, branch_bits, 1e-4);
    report(8, "capacity derivation consistency", ok,
           ok ? "" : "integral " + std::to_string(integral) + " vs " +
                     std::to_string(branch_bits));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 9. fig4/fig5 CSV outputs byte-identical across runs and thread counts.
void criterion_determinism(const std::string& cli) {
    bool ok = true;
    std::string detail;
    const std::string dir = "acceptance_out";
    std::system(("mkdir -p " + dir).c_str());
    struct Run {
        const char* cmd;
        const char* threads;
        std::string out;
    };
    const std::vector<Run> runs = {
        {"fig4", "1", dir + "/f4_a.csv"}, {"fig4", "1", dir + "/f4_b.csv"},
        {"fig4", "4", dir + "/f4_c.csv"}, {"fig5", "1", dir + "/f5_a.csv"},
        {"fig5", "1", dir + "/f5_b.csv"}, {"fig5", "4", dir + "/f5_c.csv"},
    };
    for (const auto& r : runs) {
        const std::string cmd = "THERMOLINK_THREADS=" + std::string(r.threads) + " \"" + cli +
                                "\" " + r.cmd + " --preset table1 -o " + r.out;
        if (std::system(cmd.c_str()) != 0) {
            ok = false;
            detail = std::string("command failed: ") + r.cmd;
        }
    }
    if (ok) {
        const auto f4a = read_file(dir + "/f4_a.csv");
        ok = !f4a.empty() && f4a == read_file(dir + "/f4_b.csv") &&
             f4a == read_file(dir + "/f4_c.csv");
        if (!ok) detail = "fig4 outputs differ";
    }
    if (ok) {
        const auto f5a = read_file(dir + "/f5_a.csv");
        ok = !f5a.empty() && f5a == read_file(dir + "/f5_b.csv") &&
             f5a == read_file(dir + "/f5_c.csv");
        if (!ok) detail = "fig5 outputs differ";
    }
    report(9, "sweep output determinism", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    criterion_landauer();
    criterion_product_form();
    criterion_asymptotes();
    criterion_sandwich();
    criterion_fig4();
    criterion_fig5();
    criterion_conservation();
    criterion_derivation();
    criterion_determinism(argv[1]);
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
