#pragma once

#include <stdexcept>
#include <string>

namespace satedge {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (bad vertex, bad parameter, ...).
class invalid_argument : public error {
public:
    using error::error;
};

/// Malformed graph6 / edge-list input.
class parse_error : public error {
public:
    using error::error;
};

/// The input graph contains the clique that the operation requires it to avoid.
class clique_found : public error {
public:
    using error::error;
};

/// A standing hypothesis of a check is not met by the instance.
class hypothesis_error : public error {
public:
    using error::error;
};

/// No graph with the requested parameters exists.
class infeasible_error : public error {
public:
    using error::error;
};

/// A search ran out of its node budget before it could certify its answer.
class budget_exceeded : public error {
public:
    explicit budget_exceeded(const std::string& what, unsigned long long explored = 0)
        : error(what), explored_(explored) {}
    unsigned long long explored() const noexcept { return explored_; }

private:
    unsigned long long explored_;
};

}  // namespace satedge
