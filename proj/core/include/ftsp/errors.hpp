#pragma once

#include <stdexcept>
#include <string>

namespace ftsp {

// Thrown by johnson_reweight (and build_dso) when a negative cycle is
// reachable from the super source.
struct NegativeCycleError : std::runtime_error {
    explicit NegativeCycleError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a target vertex is unreachable and the operation requires a path.
struct NoPathError : std::runtime_error {
    explicit NoPathError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by build_ft_trees when the estimated node count exceeds the budget.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph file, dso file or failure spec.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Stored dso payload or graph hash does not match its checksum line.
struct ChecksumError : std::runtime_error {
    explicit ChecksumError(const std::string& what) : std::runtime_error(what) {}
};

// Query carries more failures than the oracle was built for.
struct TooManyFailuresError : std::runtime_error {
    explicit TooManyFailuresError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ftsp
