#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stellar {

class Simplex;

/// Base of every error raised by the library. Each subclass maps to exactly
/// one CLI exit code (see ExitCode).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that cannot be turned into a valid object (bad JSON, duplicate
/// vertex within a facet, empty label, ...).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A simplex was referenced that is not a face of the complex.
class AbsentFace : public Error {
 public:
  using Error::Error;
};

/// A complex that should be a subcomplex of another is not.
class NotSubcomplex : public Error {
 public:
  using Error::Error;
};

/// A new vertex label collides with an existing one.
class NamingError : public Error {
 public:
  using Error::Error;
};

/// Edge contraction requested on an edge contained in a missing simplex.
class InvalidEdge : public Error {
 public:
  InvalidEdge(const std::string& what, std::vector<Simplex> blocking);
  const std::vector<Simplex>& blocking() const { return blocking_; }

 private:
  std::vector<Simplex> blocking_;
};

/// An operation's precondition on inducedness status is not met. Carries a
/// human-readable witness description.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A property that the construction guarantees was observed to fail. Indicates a bug
/// or a corrupted input; carries the witness description.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Size guards (vertex caps, search budgets, isomorphism node budgets).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A move script failed at a given step.
class ScriptError : public Error {
 public:
  ScriptError(std::size_t step, const std::string& what);
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// The final result of a script does not match its declared target.
class ScriptMismatch : public Error {
 public:
  using Error::Error;
};

enum class ExitCode : int {
  ok = 0,
  domain = 1,
  malformed = 2,
  resource = 3,
};

/// Classifies an exception for the CLI.
ExitCode exit_code_for(const std::exception& e);

}  // namespace stellar
