#pragma once

#include <stdexcept>
#include <string>

namespace mse {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A delete event would drive an edge multiplicity below zero.
struct PrefixViolation : Error {
    explicit PrefixViolation(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct SizeError : Error {
    explicit SizeError(const std::string& msg) : Error(msg) {}
};

struct ParameterError : Error {
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

struct InfeasibleLabel : Error {
    explicit InfeasibleLabel(const std::string& msg) : Error(msg) {}
};

// An input exceeds a deliberate resource limit (exact solvers, enumerations).
struct ResourceGuard : Error {
    explicit ResourceGuard(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace mse
