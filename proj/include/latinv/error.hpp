// Exception types shared by all latinv modules.
//
// Two families map onto CLI exit codes: InputError (bad data or usage, exit 1)
// and NumericalError (the data was fine but a numerical stage failed, exit 2).

#ifndef LATINV_ERROR_HPP_
#define LATINV_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace latinv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : Error {
  using Error::Error;
};

struct NumericalError : Error {
  using Error::Error;
};

// Unit cell whose Gram matrix is not positive definite.
struct InvalidCellError : InputError {
  using InputError::InputError;
};

// Zero volume basis/superbase, zero-length vectors, zero-sum triples.
struct DegenerateError : InputError {
  using InputError::InputError;
};

// A documented precondition was violated by the caller.
struct PreconditionError : InputError {
  using InputError::InputError;
};

// Wrong combination of arguments (mismatched orientation flags, mixed grids).
struct UsageError : InputError {
  using InputError::InputError;
};

struct NotObtuseError : InputError {
  using InputError::InputError;
};

struct InvalidVoformError : InputError {
  using InputError::InputError;
};

// Root form that does not correspond to any lattice.
struct NonRealizableError : InputError {
  using InputError::InputError;
};

// Malformed text input; the message carries the line number or record id.
struct ParseError : InputError {
  using InputError::InputError;
};

}  // namespace latinv

#endif  // LATINV_ERROR_HPP_
