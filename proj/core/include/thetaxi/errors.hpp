#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace thetaxi {

/// Base of all evaluation failures. Carries a stable machine-readable name
/// (e.g. "AxisPole", "PolylogOnSingularity") next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Argument outside an operation's domain. The CLI maps these to exit code 2.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Requested accuracy could not be certified. The CLI maps these to exit code 3.
class ToleranceError : public Error {
public:
    using Error::Error;
};

}  // namespace thetaxi
