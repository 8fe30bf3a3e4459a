#pragma once

#include <stdexcept>
#include <string>

namespace liaison {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input data is numerically inconsistent (fails the consistency gate).
struct DataError : Error {
  using Error::Error;
};

// Operation is undefined for arithmetically Cohen-Macaulay data.
struct AcmError : Error {
  using Error::Error;
};

// A stated precondition does not hold (blocked construction, bad range, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// One entry of a structured validation result.
struct Violation {
  std::string code;
  std::string detail;
};

}  // namespace liaison
