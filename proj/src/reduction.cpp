#include "hardstrings/reduction.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hardstrings/distance.hpp"
#include "hardstrings/stoppers.hpp"

namespace hardstrings {

namespace {

GapMode expected_gap_mode(Mode mode) {
  return mode == Mode::Hamming ? GapMode::Mismatch : GapMode::Edit;
}

void check_mode(const TextArtifact& art, Mode mode) {
  if (art.gap.mode != expected_gap_mode(mode))
    throw ParamError("artifact gap mode does not match the requested search mode");
}

void check_query(const SymbolString& q, int d) {
  if (static_cast<int>(q.size()) != d)
    throw LengthMismatch("query length " + std::to_string(q.size()) +
                         " differs from block length " + std::to_string(d));
  if (q.contains_gap_symbol())
    throw AlphabetClash("queries may not use the gap symbols $ or #");
}

}  // namespace

SymbolString TextArtifact::block(int block_index) const {
  for (const Placement& p : layout)
    if (p.block_index == block_index)
      return text.substr(static_cast<size_t>(p.start) - 1, static_cast<size_t>(d));
  throw ParamError("no dictionary block with index " + std::to_string(block_index));
}

TextArtifact build_text(const Instance& dict, std::optional<GapString> gap, uint64_t seed) {
  if (dict.strings.empty()) throw EmptyInput("cannot build a text from an empty dictionary");
  const int d = dict.d();
  if (dict.k >= d)
    throw ParamError("reduction requires k < d, got k = " + std::to_string(dict.k));
  for (const SymbolString& s : dict.strings)
    if (s.contains_gap_symbol())
      throw AlphabetClash("dictionary strings may not use the gap symbols $ or #");

  GapString g = [&] {
    if (gap) {
      if (gap->d != d)
        throw ParamError("supplied gap has d = " + std::to_string(gap->d) +
                         ", dictionary has d = " + std::to_string(d));
      if (gap->mode != expected_gap_mode(dict.mode))
        throw ParamError("supplied gap mode does not match the dictionary mode");
      return std::move(*gap);
    }
    if (dict.mode == Mode::Edit) return edit_gap(d);
    const GapStrategy strategy =
        2 * d <= 24 ? GapStrategy::Exhaustive : GapStrategy::RandomRetry;
    return mismatch_gap(d, strategy, seed, default_gap_budget(strategy, d));
  }();

  TextArtifact art;
  art.gap = g;
  art.d = d;
  art.text = g.symbols;
  for (size_t i = 0; i < dict.strings.size(); ++i) {
    art.layout.push_back({static_cast<int>(i) + 1, static_cast<int>(art.text.size()) + 1});
    art.text.append(dict.strings[i]);
    art.text.append(g.symbols);
  }
  return art;
}

SymbolString wrap_query(const SymbolString& q, const GapString& g) {
  check_query(q, g.d);
  return g.symbols + q + g.symbols;
}

std::vector<MatchAnswer> dict_lookup_via_text(const TextArtifact& art, const SymbolString& q,
                                              int k, Mode mode) {
  check_mode(art, mode);
  check_query(q, art.d);
  if (k < 0 || k >= art.d)
    throw ParamError("look-up requires 0 <= k < d, got k = " + std::to_string(k));
  const SymbolString pattern = wrap_query(q, art.gap);
  const int d = art.d;
  std::vector<MatchAnswer> out;

  if (mode == Mode::Hamming) {
    // Aligned windows start 2d before each S_i; all other windows are
    // excluded by the gap property (verify_offset_exclusion checks this).
    for (const TextHit& hit : text_search_hamming(art.text, pattern, k)) {
      const int delta = (hit.start - 1) % (3 * d);
      if (delta != 0) continue;
      const int index = (hit.start - 1) / (3 * d) + 1;
      if (index > static_cast<int>(art.layout.size())) continue;
      out.push_back({index, hit.distance,
                     std::make_pair(hit.start, hit.start + 5 * d - 1)});
    }
  } else {
    // For each accepted end, the optimal alignment of the pattern against the
    // witness substring locates the text segment aligned to the query part of
    // G Q G; the dictionary block it certifies (plus its neighbours, to keep
    // the answer set exactly the dictionary oracle's) is re-checked directly.
    for (const EndHit& hit : text_search_edit(art.text, pattern, k)) {
      const SymbolString window = art.text.substr(
          static_cast<size_t>(hit.witness_start) - 1,
          static_cast<size_t>(hit.end - hit.witness_start) + 1);
      const Alignment al = optimal_alignment(pattern, window);
      int mid_lo = std::numeric_limits<int>::max();
      int mid_hi = std::numeric_limits<int>::min();
      for (const auto& [pi, ti] : al.pairs) {
        if (pi < static_cast<size_t>(2 * d) || pi >= static_cast<size_t>(3 * d)) continue;
        const int text_pos = hit.witness_start + static_cast<int>(ti);  // 1-based
        mid_lo = std::min(mid_lo, text_pos);
        mid_hi = std::max(mid_hi, text_pos);
      }
      if (mid_lo > mid_hi) {
        mid_lo = hit.witness_start;
        mid_hi = hit.end;
      }
      for (const TextArtifact::Placement& p : art.layout) {
        if (p.start + d - 1 < mid_lo - d || p.start > mid_hi + d) continue;
        const SymbolString s = art.text.substr(static_cast<size_t>(p.start) - 1,
                                               static_cast<size_t>(d));
        const size_t dist = edit_distance_bounded(q, s, static_cast<size_t>(k));
        if (dist > static_cast<size_t>(k)) continue;
        const bool seen = std::any_of(out.begin(), out.end(), [&](const MatchAnswer& a) {
          return a.dict_index == p.block_index;
        });
        if (!seen)
          out.push_back({p.block_index, static_cast<int>(dist),
                         std::make_pair(hit.witness_start, hit.end)});
      }
    }
    std::sort(out.begin(), out.end(), [](const MatchAnswer& a, const MatchAnswer& b) {
      return a.dict_index < b.dict_index;
    });
  }
  return out;
}

bool verify_offset_exclusion(const TextArtifact& art, const SymbolString& q, int k) {
  if (art.gap.mode != GapMode::Mismatch)
    throw ParamError("offset exclusion applies to Hamming-mode artifacts");
  check_query(q, art.d);
  if (k < 0) throw ParamError("k must be >= 0");
  const SymbolString pattern = wrap_query(q, art.gap);
  for (const TextHit& hit : text_search_hamming(art.text, pattern, k))
    if ((hit.start - 1) % (3 * art.d) != 0) return false;
  return true;
}

bool verify_edit_offsets(const TextArtifact& art, const SymbolString& q, int k) {
  if (art.gap.mode != GapMode::Edit)
    throw ParamError("edit-offset verification applies to Edit-mode artifacts");
  check_query(q, art.d);
  if (k < 0) throw ParamError("k must be >= 0");
  const SymbolString pattern = wrap_query(q, art.gap);
  if ((art.text.size() + 1) * (pattern.size() + 1) > size_t{200'000'000})
    throw TooLarge("text too long for edit-offset verification");

  size_t best = std::numeric_limits<size_t>::max();
  for (const TextArtifact::Placement& p : art.layout) {
    const SymbolString s = art.text.substr(static_cast<size_t>(p.start) - 1,
                                           static_cast<size_t>(art.d));
    best = std::min(best, edit_distance(q, s));
  }
  // Per-end minima over all substrings; the strongest demand at each end is
  // its minimum, so checking the minima covers every substring.
  for (const EndHit& hit : text_search_edit(art.text, pattern, k))
    if (best > static_cast<size_t>(hit.distance)) return false;
  return true;
}

Instance transform_instance(const Instance& dict) {
  if (dict.mode != Mode::Hamming)
    throw ParamError("transform_instance expects a Hamming-mode instance");
  for (const SymbolString& s : dict.strings)
    if (!s.all_binary())
      throw AlphabetClash("stoppers transform requires binary dictionary strings");
  return make_instance(transform_set(dict.strings), dict.k, Mode::Edit);
}

BcpResult bichromatic_closest_pair(const std::vector<SymbolString>& red,
                                   const std::vector<SymbolString>& blue, Mode mode) {
  if (red.empty() || blue.empty())
    throw EmptySet("bichromatic closest pair needs nonempty red and blue sets");
  BcpResult best{0, 0, 0};
  bool have = false;
  for (size_t r = 0; r < red.size(); ++r) {
    for (size_t b = 0; b < blue.size(); ++b) {
      const size_t dist = mode == Mode::Hamming ? hamming(red[r], blue[b])
                                                : edit_distance(red[r], blue[b]);
      if (!have || static_cast<int>(dist) < best.distance) {
        best = {static_cast<int>(r) + 1, static_cast<int>(b) + 1, static_cast<int>(dist)};
        have = true;
      }
    }
  }
  return best;
}

}  // namespace hardstrings
