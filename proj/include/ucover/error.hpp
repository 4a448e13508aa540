#pragma once

#include <stdexcept>
#include <string>

namespace ucover {

/// Base class for every domain failure raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An objective or integrand produced a non-finite value.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, double where)
        : Error(what + " at x = " + std::to_string(where)), x(where) {}
    double x;
};

class IntegrationError : public Error {
public:
    IntegrationError(const std::string& what, double estimate)
        : Error(what), estimate(estimate) {}
    double estimate;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Angles or lengths outside the feasible set of a construction.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class GeometryError : public Error {
public:
    using Error::Error;
};

class InadmissibleChainError : public Error {
public:
    using Error::Error;
};

class FoldError : public Error {
public:
    FoldError(const std::string& what, std::size_t segment)
        : Error(what), segment(segment) {}
    std::size_t segment;
};

}  // namespace ucover
