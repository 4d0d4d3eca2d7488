#pragma once

#include <stdexcept>
#include <string>

namespace slicecert {

inline constexpr const char* kToolVersion = "0.1.0";

/// Malformed user input: bad plat word, odd twist where an even one is
/// required, unparsable file. Maps to CLI exit code 3.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal object violates its own invariants (non-simple curve,
/// inconsistent coloring, missing band bookkeeping).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slicecert
