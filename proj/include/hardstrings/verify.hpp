#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hardstrings/symbols.hpp"

namespace hardstrings {

// Outcome of one verification property; `detail` holds the counterexample
// when the property fails and a short summary otherwise.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

// Transform exactness and length identities, exhaustively for small widths
// and on `trials` random pairs at the largest power of two <= max_d.
std::vector<CheckResult> verify_stoppers(int max_d, int trials, uint64_t seed);

// Gap search + verification at one d; a forced gap skips the search and is
// verified as supplied (the negative-control path).
std::vector<CheckResult> verify_gap_suite(int d, uint64_t seed,
                                          const std::optional<SymbolString>& forced_gap);

// Counting identities at one (k, d): distinct-vs-generation-sequence query
// counts and the exact per-distance ball histogram.
std::vector<CheckResult> verify_counts(int k, int d);

// Randomized reduction round-trips in both modes with offset verification.
std::vector<CheckResult> verify_reduction(int trials, int max_d, uint64_t seed);

// Solver oracle equivalences on randomized inputs.
std::vector<CheckResult> verify_solvers(int trials, uint64_t seed);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace hardstrings
