#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thermolink/error.hpp"
#include "thermolink/thermo.hpp"

namespace thermolink {

/// Link-level description: bandwidth, symbol period and the effective
/// parallel subchannels (one BranchParams per eigenmode, min(n_t, n_r) of them).
struct LinkSpec {
    double bandwidth = 0.0;      // B, Hz
    double symbol_period = 0.0;  // tau, s
    std::vector<BranchParams> branches;
    std::size_t n_t = 0;
    std::size_t n_r = 0;

    std::size_t subchannels() const { return std::min(n_t, n_r); }

    void validate() const {
        if (!(bandwidth > 0.0)) throw validation_error("bandwidth must be > 0");
        if (!(symbol_period > 0.0)) throw validation_error("symbol period must be > 0");
        if (n_t < 1 || n_r < 1) throw validation_error("antenna counts must be >= 1");
        if (branches.empty() || branches.size() != subchannels())
            throw validation_error("branch count must equal min(n_t, n_r), got " +
                                   std::to_string(branches.size()));
        for (const auto& b : branches) b.validate();
    }
};

struct BranchTerms {
    double snr_term = 0.0;  // bit/s, B log2(1 + (S+P_FEC)/N)
    double dof_term = 0.0;  // bit/s, B log2(1 + (M_S+M_FEC)/M_N)
};

struct CapacityResult {
    double thermo_capacity = 0.0;    // C, bit/s
    double lower_bound = 0.0;        // C_LO, bit/s
    double upper_bound = 0.0;        // C_HI, bit/s
    double shannon_reference = 0.0;  // degenerate (large noise DOF) value, bit/s
    std::vector<BranchTerms> per_branch_terms;
    std::vector<std::string> warnings;
};

struct CapacityOptions {
    bool clamp_negative = false;  // clamp C to zero instead of reporting raw
};

/// Shannon MIMO capacity over eigenmodes: B * sum log2(1 + gain^2 * snr).
inline double shannon_capacity(double bandwidth, std::span<const double> gains,
                               std::span<const double> snrs) {
    if (gains.empty() || gains.size() != snrs.size())
        throw validation_error("gains and snrs must be equal-length, non-empty");
    if (!(bandwidth > 0.0)) throw domain_error("bandwidth must be > 0");
    double sum = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        if (!(gains[i] >= 0.0) || !(snrs[i] >= 0.0))
            throw validation_error("gains and snrs must be nonnegative");
        sum += std::log2(1.0 + gains[i] * gains[i] * snrs[i]);
    }
    return bandwidth * sum;
}

/// DOF flowing into the noise pool per decode branch over one symbol period:
/// tau * B / ln 2, from U_NS = k_B T_LO B tau = k_B M^NS T_LO ln 2.
inline double noise_sink_rate(double bandwidth, double tau) {
    if (!(bandwidth > 0.0)) throw domain_error("bandwidth must be > 0");
    if (!(tau > 0.0)) throw domain_error("symbol period must be > 0");
    return tau * bandwidth / M_LN2;
}

namespace detail {

/// log2(1 + prod(ratios)) computed in the log domain. Saturates with a
/// warning if the product overflows; a zero factor makes the product zero.
inline double log2_one_plus_product(std::span<const double> ratios,
                                    std::vector<std::string>* warnings,
                                    const char* label) {
    double log2_prod = 0.0;
    bool zero = false;
    for (double r : ratios) {
        if (r == 0.0) { zero = true; break; }
        log2_prod += std::log2(r);
    }
    if (zero) return 0.0;
    constexpr double max_exp = 1023.0;
    if (log2_prod > max_exp) {
        if (warnings)
            warnings->push_back(std::string(label) +
                                " product overflows double; using log-domain value");
        return log2_prod;  // log2(1+p) == log2(p) to well below 1 ulp here
    }
    return std::log2(1.0 + std::exp2(log2_prod));
}

}  // namespace detail

/// Shannon-form capacity ignoring DOF terms (the large-noise-DOF limit).
inline double degenerate_capacity(const LinkSpec& spec) {
    spec.validate();
    double sum = 0.0;
    for (const auto& b : spec.branches)
        sum += std::log2(1.0 + (b.signal_power + b.fec_power) / b.noise_power);
    return spec.bandwidth * sum;
}

/// Lower/upper bounds on the thermodynamic capacity, both carrying the
/// bandwidth factor. Products are evaluated in the log domain.
inline std::pair<double, double> capacity_bounds(const LinkSpec& spec,
                                                 std::vector<std::string>* warnings = nullptr) {
    spec.validate();
    const double n = static_cast<double>(spec.branches.size());
    std::vector<double> x, d;
    x.reserve(spec.branches.size());
    d.reserve(spec.branches.size());
    for (const auto& b : spec.branches) {
        x.push_back((b.signal_power + b.fec_power) / b.noise_power);
        d.push_back((b.signal_dof + b.fec_dof) / b.noise_dof);
    }
    double sum_x = 0.0, sum_d = 0.0;
    for (double v : x) sum_x += v;
    for (double v : d) sum_d += v;

    const double c_lo = spec.bandwidth *
        (detail::log2_one_plus_product(x, warnings, "SNR") - n * std::log2(1.0 + sum_d));
    const double c_hi = spec.bandwidth *
        (n * std::log2(1.0 + sum_x / n) - detail::log2_one_plus_product(d, warnings, "DOF"));
    return {c_lo, c_hi};
}

/// Thermodynamic channel capacity: per subchannel, the SNR log term minus the
/// DOF-ratio log term, scaled by bandwidth. Negative branch terms are kept
/// (with a warning) unless clamping is requested.
inline CapacityResult thermo_capacity(const LinkSpec& spec, const CapacityOptions& opts = {}) {
    spec.validate();
    CapacityResult r;
    r.per_branch_terms.reserve(spec.branches.size());
    double c = 0.0;
    for (std::size_t i = 0; i < spec.branches.size(); ++i) {
        const auto& b = spec.branches[i];
        BranchTerms t;
        t.snr_term = spec.bandwidth *
            std::log2(1.0 + (b.signal_power + b.fec_power) / b.noise_power);
        t.dof_term = spec.bandwidth *
            std::log2(1.0 + (b.signal_dof + b.fec_dof) / b.noise_dof);
        if (t.dof_term > t.snr_term)
            r.warnings.push_back("branch " + std::to_string(i) +
                                 ": DOF term exceeds SNR term, negative contribution");
        c += t.snr_term - t.dof_term;
        r.per_branch_terms.push_back(t);
    }
    if (c < 0.0 && opts.clamp_negative) {
        r.warnings.push_back("negative capacity clamped to zero");
        c = 0.0;
    }
    r.thermo_capacity = c;
    auto [lo, hi] = capacity_bounds(spec, &r.warnings);
    r.lower_bound = lo;
    r.upper_bound = hi;
    r.shannon_reference = degenerate_capacity(spec);
    return r;
}

}  // namespace thermolink
