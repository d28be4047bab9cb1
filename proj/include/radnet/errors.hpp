#pragma once

#include <stdexcept>
#include <string>

namespace radnet {

/// Violated precondition or invariant on an API input.
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure inside an otherwise valid computation (failed
/// decomposition, singular information geometry, diverged filter).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or invalid input file. Carries the offending field and,
/// when known, the line number.
class LoadError : public std::runtime_error {
public:
    LoadError(const std::string& field, const std::string& what, int line = 0)
        : std::runtime_error(format(field, what, line)), field_(field), line_(line) {}

    const std::string& field() const { return field_; }
    int line() const { return line_; }

private:
    static std::string format(const std::string& field, const std::string& what, int line) {
        std::string msg = "load error";
        if (line > 0) msg += " (line " + std::to_string(line) + ")";
        if (!field.empty()) msg += " [" + field + "]";
        msg += ": " + what;
        return msg;
    }

    std::string field_;
    int line_;
};

}  // namespace radnet
