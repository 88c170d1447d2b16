#pragma once

#include <stdexcept>
#include <string>

namespace hdual {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

// Parameter combination for which a representation breaks down
// (e.g. a denominator parameter hitting a non-positive integer).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Iteration or quadrature budget exhausted. Carries the best partial result.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double partial, double abs_err, long evaluations)
        : Error(what), partial_(partial), abs_err_(abs_err), evaluations_(evaluations) {}
    double partial() const noexcept { return partial_; }
    double abs_err() const noexcept { return abs_err_; }
    long evaluations() const noexcept { return evaluations_; }

private:
    double partial_;
    double abs_err_;
    long evaluations_;
};

class AdmissibilityError : public Error {
public:
    using Error::Error;
};

// Envelope slope fit landed too close to the -3/2 threshold to decide.
class InconclusiveError : public Error {
public:
    InconclusiveError(const std::string& what, double exponent)
        : Error(what), exponent_(exponent) {}
    double exponent() const noexcept { return exponent_; }

private:
    double exponent_;
};

class UnknownIdError : public Error {
public:
    using Error::Error;
};

class ConstraintError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace hdual
