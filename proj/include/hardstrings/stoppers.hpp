#pragma once

#include <vector>

#include "hardstrings/symbols.hpp"

namespace hardstrings {

// The stopper S_i: symbol c_i repeated 6 * 2^i times.
SymbolString stopper(int level);

// Appends zeros until the length is the smallest power of two >= |x|.
SymbolString pad_to_power_of_two(const SymbolString& x);

// Output length of the transform for a power-of-two input length d:
// d * (1 + 6 * log2(d)).
size_t transform_length(size_t d);

// The stoppers transform: recursively splits x in half and inserts the
// level-q stopper between the transformed halves.  |x| must be a power of two.
SymbolString stoppers_transform(const SymbolString& x);

// Pads all strings to one common power of two, then transforms each.
// Input strings must be binary and share one length.
std::vector<SymbolString> transform_set(const std::vector<SymbolString>& xs);

}  // namespace hardstrings
