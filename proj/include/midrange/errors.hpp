#pragma once

#include <stdexcept>
#include <string>

namespace midrange {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input shapes do not agree.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// Matrix failed the positive-definiteness gate (or a Cholesky pivot <= 0).
class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(const std::string& what) : Error(what) {}
};

// An iterative kernel failed to converge within its cap.
class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& what) : Error(what) {}
};

// Scalar argument outside its admissible range (e.g. geodesic parameter).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

class EmptyEnsemble : public Error {
 public:
  explicit EmptyEnsemble(const std::string& what) : Error(what) {}
};

class NonPositiveInput : public Error {
 public:
  explicit NonPositiveInput(const std::string& what) : Error(what) {}
};

// A bracketing feasibility probe came back inconclusive; the bisection
// result would be unreliable, so the solve refuses to guess.
class InconclusiveSolve : public Error {
 public:
  explicit InconclusiveSolve(const std::string& what) : Error(what) {}
};

// Randomized search ran out of trials without finding what it looked for.
class SearchExhausted : public Error {
 public:
  explicit SearchExhausted(const std::string& what) : Error(what) {}
};

// Malformed user input (files, names, flags). CLI maps this to exit code 2.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace midrange
