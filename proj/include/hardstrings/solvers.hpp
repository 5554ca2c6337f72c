#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hardstrings/instance.hpp"

namespace hardstrings {

// One dictionary hit: 1-based index, its distance to the query, and (for
// text-based look-ups) the 1-based text window [start, end] that produced it.
struct MatchAnswer {
  int dict_index = 0;
  int distance = 0;
  std::optional<std::pair<int, int>> evidence;
};

struct SearchStats {
  uint64_t nodes_visited = 0;
  uint64_t dp_cells = 0;
  std::chrono::nanoseconds wall_time{0};
};

// All dictionary strings within distance k of q, sorted by index, with true
// distances.  Hamming mode requires |q| == d.
std::vector<MatchAnswer> dict_lookup_brute(const Instance& dict, const SymbolString& q,
                                           int k, Mode mode);

// 1-based window start and its Hamming distance to the pattern.
struct TextHit {
  int start = 0;
  int distance = 0;
};

// Every start s with hamming(t[s .. s+|p|-1], p) <= k, ascending.
std::vector<TextHit> text_search_hamming(const SymbolString& t, const SymbolString& p, int k);

// Per-end result of the substring edit search: the minimum edit distance over
// all substrings of t ending at `end`, with the smallest start achieving it.
struct EndHit {
  int end = 0;
  int distance = 0;
  int witness_start = 0;
};

// Substring edit search with free text-prefix start: reports each end whose
// per-end minimum is <= k, ascending by end.
std::vector<EndHit> text_search_edit(const SymbolString& t, const SymbolString& p, int k);

// Plain trie over a Hamming-mode dictionary; children sorted by symbol.
struct TrieNode {
  std::vector<std::pair<Symbol, int>> children;
  std::vector<int> terminal;  // 1-based dictionary indices ending here
};

struct TrieIndex {
  std::vector<TrieNode> nodes;  // nodes[0] is the root
  int depth = 0;
  size_t node_count() const { return nodes.size(); }
};

TrieIndex trie_build(const Instance& dict);

// Depth-first search with a remaining-mismatch budget; answers match
// dict_lookup_brute in Hamming mode, stats count visited nodes.
std::pair<std::vector<MatchAnswer>, SearchStats> trie_lookup(const TrieIndex& idx,
                                                             const SymbolString& q, int k);

}  // namespace hardstrings
