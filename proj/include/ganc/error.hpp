#pragma once

#include <stdexcept>
#include <string>

namespace ganc {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad or unreadable input (edge lists, partition files, disconnected graphs, ...).
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// Structurally valid input but an impossible request (k > n, empty range, ...).
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& msg) : Error(msg) {}
};

// A violated internal invariant; indicates a bug, not a user mistake.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace ganc
