#pragma once

#include <stdexcept>
#include <string>

namespace barnes {

/// Argument outside the mathematical domain (pole, branch cut, wrong sector).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Index or magnitude outside the range an evaluator supports.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A numerical procedure could not reach its tolerance.  Carries the error
/// estimate that was reached before giving up.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double partial_error)
        : std::runtime_error(what), partial_error_(partial_error) {}

    double partial_error() const noexcept { return partial_error_; }

private:
    double partial_error_;
};

/// An algorithm that is guaranteed to succeed did not (e.g. no sign change
/// across a bracket that must contain a root).
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace barnes
