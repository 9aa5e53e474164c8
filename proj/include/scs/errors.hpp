#pragma once

#include <stdexcept>
#include <string>

namespace scs {

// Bad user input: unreadable files, malformed specs, out-of-band frequencies.
// The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Incompatible shapes: generator counts, grids, ranks, inner dimensions.
class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Violated grading invariants (block pattern, declared parity).
class ParityError : public std::runtime_error {
 public:
  explicit ParityError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical preconditions that failed at runtime (non-flat connection where
// flatness is required, non-diagonalizable holonomy, singular metric).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scs
