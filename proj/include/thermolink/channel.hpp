#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "thermolink/error.hpp"

namespace thermolink {

/// An n_r x n_t complex channel matrix, reproducible from its seed.
struct ChannelMatrix {
    std::size_t n_t = 0;
    std::size_t n_r = 0;
    std::uint64_t seed = 0;
    std::vector<std::complex<double>> entries;  // row-major, n_r rows

    std::complex<double> at(std::size_t row, std::size_t col) const {
        return entries[row * n_t + col];
    }
};

/// Draw an i.i.d. circularly-symmetric complex Gaussian channel, unit
/// variance per entry. mt19937_64 plus an explicit Box-Muller transform, so
/// the same seed reproduces the same matrix everywhere.
inline ChannelMatrix generate_channel(std::size_t n_t, std::size_t n_r, std::uint64_t seed) {
    if (n_t < 1 || n_r < 1) throw validation_error("channel dimensions must be >= 1");
    ChannelMatrix m;
    m.n_t = n_t;
    m.n_r = n_r;
    m.seed = seed;
    m.entries.resize(n_t * n_r);
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng]() {
        // 53-bit mantissa, shifted into (0, 1]
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    };
    for (auto& h : m.entries) {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-std::log(u1));  // Rayleigh with E[r^2] = 1
        const double phi = 2.0 * M_PI * u2;
        h = {r * std::cos(phi), r * std::sin(phi)};
    }
    return m;
}

/// Per-eigenmode amplitude gains: the min(n_t, n_r) singular values of H,
/// sorted descending.
inline std::vector<double> eigenmode_gains(const ChannelMatrix& m) {
    if (m.entries.size() != m.n_t * m.n_r)
        throw validation_error("channel matrix entry count does not match dimensions");
    Eigen::MatrixXcd h(m.n_r, m.n_t);
    for (std::size_t r = 0; r < m.n_r; ++r)
        for (std::size_t c = 0; c < m.n_t; ++c)
            h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m.at(r, c);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h);
    const auto& sv = svd.singularValues();
    std::vector<double> gains(sv.data(), sv.data() + sv.size());
    std::sort(gains.begin(), gains.end(), std::greater<>());
    return gains;
}

}  // namespace thermolink
