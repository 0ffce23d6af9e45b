#pragma once

#include <stdexcept>
#include <string>

namespace loopsmith {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input table or mapping fails a structural requirement. The CLI maps
// these to exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

struct NotLatinSquare : ValidationError {
  using ValidationError::ValidationError;
};

struct NoIdentity : ValidationError {
  using ValidationError::ValidationError;
};

struct NotAssociative : ValidationError {
  using ValidationError::ValidationError;
};

struct UnknownPreset : ValidationError {
  using ValidationError::ValidationError;
};

struct NoTwoSidedInverses : ValidationError {
  using ValidationError::ValidationError;
};

struct NotHalfAutomorphism : ValidationError {
  using ValidationError::ValidationError;
};

// Mapping does not fix the group part pointwise (or does not fix u).
struct NotCosetFixing : ValidationError {
  using ValidationError::ValidationError;
};

struct AbelianInput : ValidationError {
  using ValidationError::ValidationError;
};

struct NotGeneralizedDihedral : ValidationError {
  using ValidationError::ValidationError;
};

// A configured search bound was exceeded. The CLI maps these to exit code 3.
struct BoundError : Error {
  using Error::Error;
};

struct OrderBoundExceeded : BoundError {
  using BoundError::BoundError;
};

struct ClosureBoundExceeded : BoundError {
  using BoundError::BoundError;
};

}  // namespace loopsmith
