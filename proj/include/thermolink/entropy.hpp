#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "thermolink/constants.hpp"
#include "thermolink/error.hpp"

namespace thermolink {

/// Probability distribution over the symbol alphabet. The number of entries
/// is the alphabet size; probabilities must sum to 1.
struct SymbolDistribution {
    std::vector<double> probabilities;

    void validate() const {
        if (probabilities.empty())
            throw validation_error("symbol distribution is empty");
        double sum = 0.0;
        for (std::size_t i = 0; i < probabilities.size(); ++i) {
            const double p = probabilities[i];
            if (!(p >= 0.0) || p > 1.0)
                throw validation_error("probability out of [0,1] at index " +
                                       std::to_string(i) + ": " + std::to_string(p));
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw validation_error("probabilities sum to " + std::to_string(sum) +
                                   ", expected 1");
    }
};

/// Gibbs entropy of one symbol, -k_B * sum p ln p, in J/K.
/// Zero-probability terms contribute zero.
inline double gibbs_entropy(const SymbolDistribution& dist) {
    dist.validate();
    double s = 0.0;
    for (double p : dist.probabilities) {
        if (p > 0.0) s -= p * std::log(p);
    }
    return constants.k_B * s;
}

/// Entropy of a sequence of i.i.d. symbols, J/K.
inline double sequence_entropy(std::size_t num_symbols, const SymbolDistribution& dist) {
    return static_cast<double>(num_symbols) * gibbs_entropy(dist);
}

}  // namespace thermolink
