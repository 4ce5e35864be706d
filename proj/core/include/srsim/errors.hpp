#pragma once

#include <stdexcept>
#include <string>

namespace srsim {

/// Bad user input: invalid config field, out-of-range argument, unknown name.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical invariant (trace, norm, positivity) was violated beyond
/// tolerance, or a result could not be extracted from the data.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested problem size exceeds a hard engine limit.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace srsim
