#pragma once

#include <stdexcept>
#include <string>

namespace thermolink {

/// Malformed input: bad distribution, empty branch list, mismatched sizes.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Input outside the model's domain: nonpositive temperature, zero noise,
/// inverted temperature ordering.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

/// A conservation law would be violated (e.g. decode outputs carrying more
/// energy than was received).
class conservation_error : public domain_error {
public:
    explicit conservation_error(const std::string& msg) : domain_error(msg) {}
};

}  // namespace thermolink
