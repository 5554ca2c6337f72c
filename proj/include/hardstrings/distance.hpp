#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hardstrings/symbols.hpp"

namespace hardstrings {

// Which distance a dictionary / query / search operates under.
enum class Mode { Hamming, Edit };

// Number of mismatching positions; both strings must have equal length.
size_t hamming(const SymbolString& a, const SymbolString& b);

// Unit-cost substitution/insertion/deletion edit distance.  Internally uses a
// banded DP with doubling threshold, which returns the same value as the full
// quadratic table (cross-checked against the alignment oracle in tests).
size_t edit_distance(const SymbolString& a, const SymbolString& b);

// Edit distance capped at `limit`: returns the exact distance when it is
// <= limit, and limit + 1 otherwise.
size_t edit_distance_bounded(const SymbolString& a, const SymbolString& b, size_t limit);

// A monotone non-crossing partial matching between positions of two strings.
// Pairs are 0-based and strictly increasing in both coordinates.
struct Alignment {
  size_t left_len = 0;
  size_t right_len = 0;
  std::vector<std::pair<size_t, size_t>> pairs;

  Alignment() = default;
  // Validates monotonicity and position ranges; throws ShapeMismatch.
  Alignment(size_t left_len, size_t right_len, std::vector<std::pair<size_t, size_t>> pairs);
};

// Cost of an alignment: unpaired positions on both sides plus mismatched pairs.
size_t alignment_cost(const Alignment& al, const SymbolString& a, const SymbolString& b);

// An alignment whose cost equals edit_distance(a, b).  Deterministic: the DP
// traceback resolves ties preferring match/substitute, then delete-from-left,
// then insert.
Alignment optimal_alignment(const SymbolString& a, const SymbolString& b);

}  // namespace hardstrings
