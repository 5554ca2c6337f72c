#pragma once

#include <utility>
#include <vector>

#include "hardstrings/distance.hpp"
#include "hardstrings/errors.hpp"
#include "hardstrings/symbols.hpp"

namespace hardstrings {

// An ordered dictionary of equal-length strings with a distance budget k.
// The symbols $ and # are reserved for gap strings and never appear here.
struct Instance {
  std::vector<SymbolString> strings;
  int k = 0;
  Mode mode = Mode::Hamming;

  // Common string length; the dictionary must be nonempty.
  int d() const {
    if (strings.empty()) throw EmptyInput("empty instance has no block length d");
    return static_cast<int>(strings.front().size());
  }
};

// Validating constructor.  An empty string list is allowed (used by index
// builders); when nonempty, all lengths must agree and k must be < d.
inline Instance make_instance(std::vector<SymbolString> strings, int k, Mode mode) {
  if (k < 0) throw ParamError("k must be >= 0, got " + std::to_string(k));
  for (const SymbolString& s : strings) {
    if (s.size() != strings.front().size())
      throw MixedLengths("instance strings must share one length");
    if (s.contains_gap_symbol())
      throw AlphabetClash("instance strings may not use the gap symbols $ or #");
  }
  if (!strings.empty() && k >= static_cast<int>(strings.front().size()))
    throw ParamError("instance requires k < d, got k = " + std::to_string(k) +
                     ", d = " + std::to_string(strings.front().size()));
  return Instance{std::move(strings), k, mode};
}

}  // namespace hardstrings
