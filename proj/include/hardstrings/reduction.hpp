#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hardstrings/gapstrings.hpp"
#include "hardstrings/instance.hpp"
#include "hardstrings/solvers.hpp"

namespace hardstrings {

// The reduced text G S_1 G S_2 ... S_M G together with its gap string and the
// 1-based position of each dictionary string inside the text.
struct TextArtifact {
  struct Placement {
    int block_index = 0;  // 1-based dictionary index
    int start = 0;        // 1-based start of S_i in text
  };

  SymbolString text;
  GapString gap;
  int d = 0;
  std::vector<Placement> layout;

  // Dictionary string S_i recovered from the text via the layout.
  SymbolString block(int block_index) const;
};

// Interleaves the dictionary with a gap string: |text| == 3n + 2d and S_i
// starts at (3(i-1)+2)d + 1.  Hamming instances get a verified mismatch gap
// (searched with `seed` when none is supplied), Edit instances get $^d #^d.
// A supplied gap is used as-is, which lets tests build negative controls.
TextArtifact build_text(const Instance& dict, std::optional<GapString> gap = std::nullopt,
                        uint64_t seed = 0);

// G Q G, of length 5d.
SymbolString wrap_query(const SymbolString& q, const GapString& g);

// Answers the dictionary look-up through the text reduction: searches for
// wrap_query(q, art.gap) in art.text, maps accepted windows back to
// dictionary indices, and reports the recomputed distance to the dictionary
// string.  The result equals dict_lookup_brute on the underlying dictionary.
std::vector<MatchAnswer> dict_lookup_via_text(const TextArtifact& art, const SymbolString& q,
                                              int k, Mode mode);

// True iff every length-5d text window that is NOT aligned with a G S_i G
// block lies at Hamming distance > k from the wrapped query.
bool verify_offset_exclusion(const TextArtifact& art, const SymbolString& q, int k);

// True iff every substring T' of the text with ED(wrapped query, T') <= k
// admits a dictionary string S with ED(q, S) <= ED(wrapped query, T').
// Checked per end position: the per-substring condition holds iff it holds
// for the minimum-distance substring at each end.
bool verify_edit_offsets(const TextArtifact& art, const SymbolString& q, int k);

// Per-string stoppers transform of a binary Hamming dictionary; k unchanged,
// pairwise edit distances of the output equal pairwise Hamming distances of
// the input.
Instance transform_instance(const Instance& dict);

struct BcpResult {
  int r_index = 0;  // 1-based
  int b_index = 0;  // 1-based
  int distance = 0;
};

// Exact brute-force bichromatic closest pair; ties broken by smallest
// (r_index, b_index).
BcpResult bichromatic_closest_pair(const std::vector<SymbolString>& red,
                                   const std::vector<SymbolString>& blue, Mode mode);

}  // namespace hardstrings
