#include "hardstrings/solvers.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hardstrings {

namespace {

void check_k(int k) {
  if (k < 0) throw ParamError("k must be >= 0, got " + std::to_string(k));
}

}  // namespace

std::vector<MatchAnswer> dict_lookup_brute(const Instance& dict, const SymbolString& q,
                                           int k, Mode mode) {
  check_k(k);
  std::vector<MatchAnswer> out;
  for (size_t i = 0; i < dict.strings.size(); ++i) {
    const SymbolString& s = dict.strings[i];
    size_t dist = mode == Mode::Hamming
                      ? hamming(q, s)
                      : edit_distance_bounded(q, s, static_cast<size_t>(k));
    if (dist <= static_cast<size_t>(k))
      out.push_back({static_cast<int>(i) + 1, static_cast<int>(dist), std::nullopt});
  }
  return out;
}

std::vector<TextHit> text_search_hamming(const SymbolString& t, const SymbolString& p, int k) {
  check_k(k);
  if (p.size() > t.size())
    throw PatternTooLong("pattern length " + std::to_string(p.size()) +
                         " exceeds text length " + std::to_string(t.size()));
  std::vector<TextHit> out;
  for (size_t s = 0; s + p.size() <= t.size(); ++s) {
    int dist = 0;
    for (size_t j = 0; j < p.size() && dist <= k; ++j) dist += t[s + j] != p[j];
    if (dist <= k) out.push_back({static_cast<int>(s) + 1, dist});
  }
  return out;
}

std::vector<EndHit> text_search_edit(const SymbolString& t, const SymbolString& p, int k) {
  check_k(k);
  const int n = static_cast<int>(t.size());
  const int m = static_cast<int>(p.size());
  // dp[j] = min over starts s of ED(t[s..j], p[1..i]); wit[j] = smallest such s.
  std::vector<int> dp(n + 1, 0), wit(n + 1), ndp(n + 1), nwit(n + 1);
  for (int j = 0; j <= n; ++j) wit[j] = j + 1;
  for (int i = 1; i <= m; ++i) {
    ndp[0] = i;
    nwit[0] = 1;
    for (int j = 1; j <= n; ++j) {
      const int sub = dp[j - 1] + (t[j - 1] != p[i - 1]);
      const int skip_text = ndp[j - 1] + 1;
      const int skip_pat = dp[j] + 1;
      const int best = std::min({sub, skip_text, skip_pat});
      int w = std::numeric_limits<int>::max();
      if (sub == best) w = std::min(w, wit[j - 1]);
      if (skip_text == best) w = std::min(w, nwit[j - 1]);
      if (skip_pat == best) w = std::min(w, wit[j]);
      ndp[j] = best;
      nwit[j] = w;
    }
    dp.swap(ndp);
    wit.swap(nwit);
  }
  std::vector<EndHit> out;
  for (int j = 1; j <= n; ++j)
    if (dp[j] <= k) out.push_back({j, dp[j], wit[j]});
  return out;
}

TrieIndex trie_build(const Instance& dict) {
  if (dict.mode != Mode::Hamming)
    throw ParamError("trie_build expects a Hamming-mode dictionary");
  TrieIndex idx;
  idx.nodes.emplace_back();
  idx.depth = dict.strings.empty() ? 0 : dict.d();
  for (size_t i = 0; i < dict.strings.size(); ++i) {
    int cur = 0;
    for (Symbol c : dict.strings[i]) {
      auto& children = idx.nodes[cur].children;
      auto it = std::lower_bound(
          children.begin(), children.end(), c,
          [](const std::pair<Symbol, int>& edge, Symbol sym) { return edge.first < sym; });
      if (it != children.end() && it->first == c) {
        cur = it->second;
      } else {
        const int next = static_cast<int>(idx.nodes.size());
        const size_t pos = static_cast<size_t>(it - children.begin());
        idx.nodes.emplace_back();  // may reallocate; re-fetch the child list
        auto& fresh = idx.nodes[cur].children;
        fresh.insert(fresh.begin() + pos, {c, next});
        cur = next;
      }
    }
    idx.nodes[cur].terminal.push_back(static_cast<int>(i) + 1);
  }
  return idx;
}

namespace {

void trie_dfs(const TrieIndex& idx, const SymbolString& q, int k, int node, int depth,
              int used, SearchStats& stats, std::vector<MatchAnswer>& out) {
  ++stats.nodes_visited;
  if (depth == idx.depth) {
    for (int index : idx.nodes[node].terminal) out.push_back({index, used, std::nullopt});
    return;
  }
  for (const auto& [sym, child] : idx.nodes[node].children) {
    const int next_used = used + (sym != q[depth]);
    if (next_used <= k) trie_dfs(idx, q, k, child, depth + 1, next_used, stats, out);
  }
}

}  // namespace

std::pair<std::vector<MatchAnswer>, SearchStats> trie_lookup(const TrieIndex& idx,
                                                             const SymbolString& q, int k) {
  check_k(k);
  if (static_cast<int>(q.size()) != idx.depth)
    throw LengthMismatch("query length " + std::to_string(q.size()) +
                         " differs from trie depth " + std::to_string(idx.depth));
  SearchStats stats;
  const auto start = std::chrono::steady_clock::now();
  std::vector<MatchAnswer> out;
  trie_dfs(idx, q, k, 0, 0, 0, stats, out);
  std::sort(out.begin(), out.end(),
            [](const MatchAnswer& a, const MatchAnswer& b) { return a.dict_index < b.dict_index; });
  stats.wall_time = std::chrono::steady_clock::now() - start;
  return {std::move(out), stats};
}

}  // namespace hardstrings
