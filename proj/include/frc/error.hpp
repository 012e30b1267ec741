#pragma once

#include <stdexcept>
#include <string>

namespace frc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments outside the documented parameter domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration would exceed the configured subset cap.
class EnumerationCapError : public Error {
public:
    using Error::Error;
};

/// A design or code handed to a constructor does not validate.
class InvalidDesignError : public Error {
public:
    using Error::Error;
};

class FieldCapacityError : public Error {
public:
    using Error::Error;
};

class LengthMismatchError : public Error {
public:
    using Error::Error;
};

class InsufficientPacketsError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

/// No perfect matching exists for some failed node of some failure set.
class RepairInfeasibleError : public Error {
public:
    using Error::Error;
};

class FileTooLargeError : public Error {
public:
    using Error::Error;
};

/// Failing the requested nodes would leave some packet without a replica.
class ToleranceExceededError : public Error {
public:
    using Error::Error;
};

class MissingTableEntryError : public Error {
public:
    using Error::Error;
};

/// A helper does not hold the packet the repair table assigned to it.
/// Indicates drift between table and state, i.e. a bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class FailedNodeContactedError : public Error {
public:
    using Error::Error;
};

/// Wraps an error raised while executing one event of a scenario script.
class ScenarioError : public Error {
public:
    ScenarioError(std::size_t event_index, const std::string& what)
        : Error("event " + std::to_string(event_index) + ": " + what), event_index_(event_index) {}

    std::size_t event_index() const noexcept { return event_index_; }

private:
    std::size_t event_index_;
};

} // namespace frc
