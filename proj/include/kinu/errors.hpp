#pragma once

#include <stdexcept>
#include <string>

namespace kinu {

// Parameter outside the mathematical domain of an operation (z < 0 for the
// principal Lambert branch, nu <= x for the saddle expansion, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Series division by a series whose constant term is not an invertible scalar.
class NonInvertibleSeries : public std::domain_error {
public:
    explicit NonInvertibleSeries(const std::string& msg) : std::domain_error(msg) {}
};

// A derivation self-check failed, or an input violated a cross-equation
// consistency requirement.  Signals a defect, not a user error.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

// Requested accuracy could not be reached; carries the best value obtained.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& msg, double best, double est_error)
        : std::runtime_error(msg), best_value(best), est_error(est_error) {}
    double best_value;
    double est_error;
};

// Root bracketing failed after the allowed expansions.
class BracketingError : public std::runtime_error {
public:
    explicit BracketingError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace kinu
