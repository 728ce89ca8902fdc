#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace morseaut {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad facet lists, bad generator parameters, bad files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A precondition on the shape of a complex was violated (e.g. disconnected).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// An enumeration produced more results than its budget allows.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::size_t budget, std::size_t reached)
      : Error(std::move(what) + ": budget of " + std::to_string(budget) +
              " exceeded (reached " + std::to_string(reached) + ")"),
        budget_(budget),
        reached_(reached) {}

  std::size_t budget() const noexcept { return budget_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t budget_;
  std::size_t reached_;
};

/// Two pairs of a discrete vector field share a simplex.
class MatchingViolation : public Error {
 public:
  MatchingViolation(std::uint32_t simplex, const std::string& label)
      : Error("simplex " + label + " appears in more than one pair"),
        simplex_(simplex) {}

  std::uint32_t simplex() const noexcept { return simplex_; }

 private:
  std::uint32_t simplex_;
};

/// A map passed as an automorphism does not preserve the structure.
class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

/// Nodes of a Hasse layer do not share a common degree.
class NonUniformLayer : public Error {
 public:
  using Error::Error;
};

}  // namespace morseaut
