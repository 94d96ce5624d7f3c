#ifndef SCQMAP_ERRORS_HPP
#define SCQMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scq {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation at (or numerically indistinguishable from) a pole.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// A numerical routine could not reach its accuracy target.
class AccuracyError : public Error {
public:
    explicit AccuracyError(const std::string& msg) : Error(msg) {}
};

// Power-series tail above tolerance; raise the truncation degree.
class TruncationError : public Error {
public:
    explicit TruncationError(const std::string& msg) : Error(msg) {}
};

// The seed solution vanishes on the integration segment.
class SeedError : public Error {
public:
    explicit SeedError(const std::string& msg) : Error(msg) {}
};

// Invalid geometric parameter combination; message names the constraint.
class GeometryError : public Error {
public:
    explicit GeometryError(const std::string& msg) : Error(msg) {}
};

// Root search failed to bracket a solution.
class NoSolutionError : public Error {
public:
    explicit NoSolutionError(const std::string& msg) : Error(msg) {}
};

// Transformation is not hyperbolic (|trace| <= 2).
class NotHyperbolicError : public Error {
public:
    explicit NotHyperbolicError(const std::string& msg) : Error(msg) {}
};

} // namespace scq

#endif
