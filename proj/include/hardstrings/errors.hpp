#pragma once

#include <stdexcept>
#include <string>

namespace hardstrings {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two equal-length-only operations received strings of different lengths.
struct LengthMismatch : Error { using Error::Error; };
// An alignment's declared shape disagrees with the strings it is applied to,
// or its pairs violate the monotone non-crossing invariant.
struct ShapeMismatch : Error { using Error::Error; };
// Stopper level below 1.
struct InvalidLevel : Error { using Error::Error; };
// An operation that needs a nonempty input got an empty one.
struct EmptyInput : Error { using Error::Error; };
// Input length must be a power of two and is not.
struct NotPowerOfTwo : Error { using Error::Error; };
// A binary-only operation met a symbol outside {0,1}.
struct NonBinarySymbol : Error { using Error::Error; };
// A set of strings that must share one length does not.
struct MixedLengths : Error { using Error::Error; };
// Generic invalid-parameter error (bad k/d combinations, bad probabilities, ...).
struct ParamError : Error { using Error::Error; };
// A block string does not have the required block structure (base / query shape).
struct ShapeError : Error { using Error::Error; };
// A brute-force enumeration would exceed the configured size limit.
struct TooLarge : Error { using Error::Error; };
// No gap string passed verification within the search budget.
struct GapNotFound : Error { using Error::Error; };
// Dictionary or query symbols collide with the reserved gap alphabet {$,#}.
struct AlphabetClash : Error { using Error::Error; };
// A closest-pair input set is empty.
struct EmptySet : Error { using Error::Error; };
// Text-search pattern longer than the text.
struct PatternTooLong : Error { using Error::Error; };
// Filesystem-level failure (open/read/write).
struct IoError : Error { using Error::Error; };
// A file parsed but violates the declared format.
struct FormatError : Error { using Error::Error; };

}  // namespace hardstrings
