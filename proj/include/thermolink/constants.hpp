#pragma once

#include <cmath>

namespace thermolink {

inline constexpr const char* version = "0.1.0";

/// Physical constants used throughout the library. SI units: J, K, W, s.
/// Degrees of freedom (DOF) are dimensionless bit counts.
struct PhysicalConstants {
    double k_B = 1.38e-23;              // Boltzmann constant, J/K
    double bit_factor = 1.38e-23 * M_LN2;  // k_B * ln 2, J/K per bit

    static constexpr PhysicalConstants standard() { return {}; }
};

inline constexpr PhysicalConstants constants{};

}  // namespace thermolink
