#pragma once

#include <stdexcept>
#include <string>

namespace stackgov {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a precondition (bad dimension,
/// out-of-range parameter, empty set where one is required).
struct InvalidArgument : Error {
  using Error::Error;
};

/// The request is well-formed but exceeds a documented solver limit.
struct UnsupportedSize : Error {
  using Error::Error;
};

/// An iteration produced a non-finite value; the message names the point.
struct NumericalFailure : Error {
  using Error::Error;
};

/// A linear system required by the solver is singular or too
/// ill-conditioned to trust; the message names the point.
struct SingularSystem : Error {
  using Error::Error;
};

}  // namespace stackgov
