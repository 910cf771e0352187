#pragma once

#include <stdexcept>
#include <string>

namespace niep {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad argument or violated precondition (k < 1, zero polynomial, ...).
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// An operation left the supported scalar field (e.g. an unpaired
/// quadratic root producing an irrational coefficient).
class FieldError : public Error {
  public:
    explicit FieldError(const std::string& msg) : Error(msg) {}
};

/// Inversion of a singular matrix; carries the exact rank found.
class SingularMatrixError : public Error {
  public:
    SingularMatrixError(const std::string& msg, int rank) : Error(msg), rank_(rank) {}
    int rank() const { return rank_; }

  private:
    int rank_;
};

/// Iterative solve failed to reach tolerance; carries the best residual seen.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string& msg, double best_residual)
        : Error(msg), best_residual_(best_residual) {}
    double best_residual() const { return best_residual_; }

  private:
    double best_residual_;
};

/// A constructed object failed its own post-verification.
class ConstructionError : public Error {
  public:
    explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

}  // namespace niep
