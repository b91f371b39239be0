#ifndef BICRIT_ERRORS_HPP
#define BICRIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bicrit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates its domain (epsilon out of (0,1], etc.).
struct InvalidArgument : Error {
  using Error::Error;
};

/// Instance data violates a structural or positivity precondition.
struct ValidationError : Error {
  using Error::Error;
};

struct DisconnectedGraph : ValidationError {
  using ValidationError::ValidationError;
};

struct Unreachable : ValidationError {
  using ValidationError::ValidationError;
};

struct ParseError : Error {
  using Error::Error;
};

/// A token does not encode a feasible solution of the instance.
struct InfeasibleToken : Error {
  using Error::Error;
};

struct NoFeasibleSolution : Error {
  using Error::Error;
};

/// Raised by algorithms whose correctness needs alpha = 1.
struct ExactOracleRequired : Error {
  using Error::Error;
};

struct NotParametricCapable : Error {
  using Error::Error;
};

/// Brute-force enumeration would exceed its configured caps.
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace bicrit

#endif  // BICRIT_ERRORS_HPP
