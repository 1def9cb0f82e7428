#pragma once

#include <stdexcept>
#include <string>

namespace shiftpoly {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource cap was hit before the computation finished.
// `cap` names the cap so callers can report which limit to raise.
struct CapExceeded : Error {
  std::string cap;
  CapExceeded(std::string cap_name, const std::string& msg)
      : Error("cap '" + cap_name + "' exceeded: " + msg), cap(std::move(cap_name)) {}
};

// Malformed or out-of-domain input (bad measure, bad JSON payload, wrong dimension).
struct InvalidInput : Error {
  using Error::Error;
};

// The feasible region has a recession direction; vertex data does not describe it.
struct Unbounded : Error {
  using Error::Error;
};

// An internal exact cross-check failed.  Always a bug, never a rounding artifact.
struct VerificationFailure : Error {
  using Error::Error;
};

}  // namespace shiftpoly
