#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ed2 {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument, out-of-range parameter, or violated call contract.
struct RangeError : Error {
  using Error::Error;
};

// A lattice membership precondition failed; `column` names the offender.
struct MembershipError : Error {
  int column;
  MembershipError(const std::string& what, int col) : Error(what), column(col) {}
};

// An operation required exhaustive enumeration beyond the hard limit.
struct TooLargeError : Error {
  using Error::Error;
};

// A candidate equivariant map is not constant on stabilizer translates.
struct WellDefinedError : Error {
  std::string element;  // offending stabilizer element, cycle notation
  int component;        // source orbit/component index (0-based)
  WellDefinedError(const std::string& what, std::string elem, int comp)
      : Error(what), element(std::move(elem)), component(comp) {}
};

// A witness family's soundness precondition failed.
struct WitnessError : Error {
  using Error::Error;
};

// Mutually inconsistent bound records (lower > upper).
struct ConflictError : Error {
  using Error::Error;
};

// Filesystem failure while emitting a report.
struct IoError : Error {
  using Error::Error;
};

}  // namespace ed2
