#pragma once

#include <cmath>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "thermolink/capacity.hpp"
#include "thermolink/error.hpp"
#include "thermolink/scenario.hpp"

namespace thermolink {

enum class SweepVariable { noise_dof, coding_overhead };

inline std::string to_string(SweepVariable v) {
    return v == SweepVariable::noise_dof ? "noise_dof" : "coding_overhead";
}

struct SweepOutputs {
    bool thermo = true;
    bool shannon = true;
    bool lower_bound = false;
    bool upper_bound = false;
    bool energy_per_bit = false;
};

struct SweepSpec {
    Scenario base;
    SweepVariable variable = SweepVariable::noise_dof;
    std::vector<double> grid;
    SweepOutputs outputs;

    void validate() const {
        base.validate();
        if (grid.empty()) throw validation_error("sweep grid is empty");
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!(grid[i] > 0.0) && !(variable == SweepVariable::coding_overhead && grid[i] == 0.0))
                throw validation_error("grid values must be positive (psi may be 0)");
            if (i > 0 && !(grid[i] > grid[i - 1]))
                throw validation_error("grid must be strictly increasing");
        }
    }
};

struct SweepRecord {
    double variable_value = 0.0;
    CapacityResult capacity;
    std::optional<double> energy_per_bit_direct;  // J/bit
};

/// Thrown when a grid point fails; carries the records completed before the
/// failing point so long sweeps are not silently truncated.
class sweep_error : public std::runtime_error {
public:
    sweep_error(const std::string& msg, double grid_value, std::vector<SweepRecord> partial)
        : std::runtime_error("sweep failed at " + std::to_string(grid_value) + ": " + msg),
          grid_value(grid_value),
          partial_records(std::move(partial)) {}

    double grid_value;
    std::vector<SweepRecord> partial_records;
};

namespace detail {

inline Scenario with_override(const Scenario& base, SweepVariable var, double value) {
    Scenario s = base;
    if (var == SweepVariable::noise_dof)
        s.noise_dof_per_branch = value;
    else
        s.coding_overhead = value;
    return s;
}

inline SweepRecord evaluate_point(const SweepSpec& spec, double value) {
    const Scenario s = with_override(spec.base, spec.variable, value);
    SweepRecord rec;
    rec.variable_value = value;
    rec.capacity = thermo_capacity(scenario_to_link_spec(s));
    if (spec.outputs.energy_per_bit) {
        const DecodeSetup d = scenario_decode_setup(s);
        rec.energy_per_bit_direct =
            energy_per_bit(d.received, d.outputs, d.noise_pool_temperature).direct;
    }
    return rec;
}

}  // namespace detail

/// Evaluate every grid point. Points are independent; with num_threads > 1
/// they are computed concurrently but assembled in grid order, so the result
/// does not depend on the thread count.
inline std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned num_threads = 1) {
    spec.validate();
    const std::size_t n = spec.grid.size();
    std::vector<SweepRecord> records(n);
    std::vector<std::exception_ptr> errors(n);

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                records[i] = detail::evaluate_point(spec, spec.grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (num_threads <= 1 || n < 2) {
        worker(0, n);
    } else {
        const unsigned t = std::min<unsigned>(num_threads, static_cast<unsigned>(n));
        std::vector<std::thread> threads;
        const std::size_t chunk = (n + t - 1) / t;
        for (unsigned k = 0; k < t; ++k) {
            const std::size_t begin = k * chunk;
            if (begin >= n) break;
            threads.emplace_back(worker, begin, std::min(begin + chunk, n));
        }
        for (auto& th : threads) th.join();
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) {
            std::vector<SweepRecord> partial(records.begin(),
                                             records.begin() + static_cast<std::ptrdiff_t>(i));
            try {
                std::rethrow_exception(errors[i]);
            } catch (const std::exception& e) {
                throw sweep_error(e.what(), spec.grid[i], std::move(partial));
            }
        }
    }
    return records;
}

/// Log-spaced grid of `points` values from `lo` to `hi` inclusive.
inline std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    std::vector<double> g(points);
    const double l0 = std::log10(lo), l1 = std::log10(hi);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) /
                                  static_cast<double>(points - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

/// Uniform grid of `points` values from `lo` to `hi` inclusive.
inline std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    g.front() = lo;
    g.back() = hi;
    return g;
}

/// Capacity vs noise DOF: M_N log-spaced from 1 (impulse noise) to 1e6
/// (Gaussian limit), 61 points.
inline SweepSpec fig4_spec(const Scenario& base) {
    SweepSpec spec;
    spec.base = base;
    spec.variable = SweepVariable::noise_dof;
    spec.grid = log_grid(1.0, 1e6, 61);
    spec.outputs = SweepOutputs{true, true, false, false, false};
    return spec;
}

inline std::vector<SweepRecord> fig4_sweep(const Scenario& base, unsigned num_threads = 1) {
    return run_sweep(fig4_spec(base), num_threads);
}

/// Capacity vs coding overhead: psi uniform on [0, 2], 41 points, with the
/// bound envelope.
inline SweepSpec fig5_spec(const Scenario& base, double psi_max = 2.0) {
    SweepSpec spec;
    spec.base = base;
    spec.variable = SweepVariable::coding_overhead;
    spec.grid = linear_grid(0.0, psi_max, 41);
    spec.outputs = SweepOutputs{true, true, true, true, false};
    return spec;
}

inline std::vector<SweepRecord> fig5_sweep(const Scenario& base, unsigned num_threads = 1) {
    return run_sweep(fig5_spec(base), num_threads);
}

}  // namespace thermolink
