#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hardstrings/symbols.hpp"

namespace hardstrings {

enum class GapMode { Mismatch, Edit };
enum class GapStrategy { Exhaustive, RandomRetry, KWise };

// A {$,#}-string of length 2d separating dictionary strings in reduced texts.
// Mismatch-mode values produced by the factories below satisfy verify_gap;
// Edit-mode values are exactly $^d #^d.
struct GapString {
  SymbolString symbols;
  int d = 0;
  GapMode mode = GapMode::Mismatch;
};

// $^d #^d.
GapString edit_gap(int d);

// True iff for every i with ceil(3d/2) <= i <= 2d-1 the length-i prefix and
// suffix of g are at Hamming distance >= floor(d/2)+1.
bool verify_gap(const SymbolString& g, int d);

// First offset i violating the gap property, if any.
std::optional<int> gap_counterexample(const SymbolString& g, int d);

// Searches for a verified mismatch gap.  Exhaustive scans {$,#}^{2d} in
// lexicographic order ($ < #); RandomRetry draws candidates from the seed;
// KWise enumerates seeds of the 2*ceil(log2 d)-wise independent generator.
// At most `budget` candidates are examined (budget 0 examines none).
GapString mismatch_gap(int d, GapStrategy strategy, uint64_t seed, uint64_t budget);

// Budget used by the CLI when none is given: the full space (capped) for
// Exhaustive, 2^20 candidates otherwise.
uint64_t default_gap_budget(GapStrategy strategy, int d);

// Validating constructor for gap strings read from files.
GapString gap_from_symbols(SymbolString s, int d, GapMode mode);

// Shape-checked only (length and alphabet); used for negative controls that
// deliberately carry a failing mismatch gap.
GapString gap_unchecked(SymbolString s, int d, GapMode mode);

// Deterministic t-wise independent bit string: bit j is the low bit of a
// degree (t-1) polynomial over GF(2^m), 2^m >= count, evaluated at the field
// element j; coefficients are consecutive m-bit chunks of the seed bit stream
// (the 64 seed bits, then a splitmix64 extension).  Any t positions are
// jointly uniform when the seed ranges over the full coefficient space.
SymbolString kwise_bits(uint64_t seed, int independence, size_t count);

// GF(2^m) helpers, exposed for the field self-tests.
namespace gf2 {
// Full bitmask (including the leading term) of the irreducible polynomial
// used for GF(2^m), 1 <= m <= 16.
uint32_t irreducible_poly(int m);
// Carry-less product reduced mod irreducible_poly(m).
uint64_t mul(uint64_t a, uint64_t b, int m);
}  // namespace gf2

}  // namespace hardstrings
