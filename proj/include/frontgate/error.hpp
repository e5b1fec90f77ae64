#pragma once

#include <stdexcept>
#include <string>

namespace frontgate {

/// Failure categories. The CLI maps them to exit codes 2, 3 and 4.
enum class ErrorKind {
    config,      ///< invalid input or parameters outside an operation's domain
    infeasible,  ///< the mathematical object does not exist (no barrier, divergence, ...)
    numerical,   ///< an algorithm failed to converge
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_config(const std::string& what) { throw Error(ErrorKind::config, what); }
[[noreturn]] inline void fail_infeasible(const std::string& what) { throw Error(ErrorKind::infeasible, what); }
[[noreturn]] inline void fail_numerical(const std::string& what) { throw Error(ErrorKind::numerical, what); }

}  // namespace frontgate
