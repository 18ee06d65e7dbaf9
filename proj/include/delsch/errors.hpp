#pragma once

#include <stdexcept>

namespace delsch {

// A quantity that is an integer by construction failed to divide exactly.
// Always a transcription bug in this library, never bad user input, so the
// policy everywhere is to throw instead of truncating.
struct InexactDivision : std::logic_error {
  using std::logic_error::logic_error;
};

// Two independent computation routes for the same quantity disagreed.
struct MethodMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

struct BadModulus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ModulusMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotInvertible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotAPrime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PrimeTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation whose hypothesis requires an even index was given an odd one.
struct OddN : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CacheFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace delsch
