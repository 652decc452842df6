#pragma once

#include <stdexcept>
#include <string>

namespace scarlab {

/// Requested object exceeds a configured size guard (basis dimension,
/// dense-solver limit, matching-search limit).
class DimensionLimitError : public std::runtime_error {
public:
    explicit DimensionLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed to meet its tolerance contract.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace scarlab
