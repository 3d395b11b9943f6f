#pragma once

#include <stdexcept>
#include <string>

namespace coaltrade {

/// Raised when an iterative solver fails to reach its tolerances within the
/// configured iteration limit.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an enumeration or wall-clock budget is exhausted before a
/// result could be produced.  Callers that report tables map this to a
/// timed-out row instead of aborting the whole experiment.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when scenario files are missing, malformed, or violate a model
/// invariant.  The message names the file, the line or entry, and the
/// constraint that failed.
class LoadError : public std::runtime_error {
public:
    explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coaltrade
