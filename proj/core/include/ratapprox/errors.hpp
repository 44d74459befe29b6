#pragma once

#include <stdexcept>
#include <string>

namespace ratapprox {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad sizes, mismatched shapes, out-of-range degrees.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

// A pivot fell below the singularity threshold while factoring.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, int pivot_index)
        : Error(what), pivot(pivot_index) {}
    int pivot;
};

// A construction method could not produce an approximant.
class ConstructionError : public Error {
public:
    explicit ConstructionError(const std::string& what, double cond = 0.0)
        : Error(what), condition(cond) {}
    double condition;
};

// Target function undefined / non-finite where it was needed.
class EvaluationError : public Error {
public:
    explicit EvaluationError(const std::string& what) : Error(what) {}
};

// Argument outside the mathematical domain of an elementary function.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Remez exchange diverged (error grew for several consecutive cycles).
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& what) : Error(what) {}
};

// Error curve did not expose enough alternating extrema to seed Remez.
class InsufficientAlternationError : public Error {
public:
    explicit InsufficientAlternationError(const std::string& what) : Error(what) {}
};

}  // namespace ratapprox
