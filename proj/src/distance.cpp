#include "hardstrings/distance.hpp"

#include <algorithm>
#include <cstdint>

namespace hardstrings {

size_t hamming(const SymbolString& a, const SymbolString& b) {
  if (a.size() != b.size())
    throw LengthMismatch("hamming requires equal lengths, got " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
  size_t count = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++count;
  return count;
}

size_t edit_distance_bounded(const SymbolString& a, const SymbolString& b, size_t limit) {
  const size_t n = a.size(), m = b.size();
  const size_t inf = limit + 1;
  const size_t diff = n > m ? n - m : m - n;
  if (diff > limit) return inf;

  std::vector<size_t> prev(m + 1, inf), cur(m + 1, inf);
  for (size_t j = 0; j <= std::min(m, limit); ++j) prev[j] = j;

  for (size_t i = 1; i <= n; ++i) {
    const size_t lo = i > limit ? i - limit : 0;
    const size_t hi = std::min(m, i + limit);
    // Cells just outside the band must read as infinity.
    if (lo > 0) cur[lo - 1] = inf;
    if (hi < m) cur[hi + 1] = inf;
    for (size_t j = lo; j <= hi; ++j) {
      size_t best = inf;
      if (j == 0) {
        best = i <= limit ? i : inf;
      } else {
        if (prev[j - 1] < inf)
          best = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
        if (prev[j] < inf) best = std::min(best, prev[j] + 1);
        if (j > lo && cur[j - 1] < inf) best = std::min(best, cur[j - 1] + 1);
      }
      cur[j] = std::min(best, inf);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

size_t edit_distance(const SymbolString& a, const SymbolString& b) {
  const size_t n = a.size(), m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  const size_t diff = n > m ? n - m : m - n;
  const size_t cap = std::max(n, m);
  size_t t = std::max<size_t>(diff, 1);
  while (true) {
    size_t r = edit_distance_bounded(a, b, t);
    if (r <= t) return r;
    t = std::min(t * 2, cap);  // ED <= max(n,m), so the loop terminates
  }
}

Alignment::Alignment(size_t left_len_, size_t right_len_,
                     std::vector<std::pair<size_t, size_t>> pairs_)
    : left_len(left_len_), right_len(right_len_), pairs(std::move(pairs_)) {
  for (size_t idx = 0; idx < pairs.size(); ++idx) {
    auto [i, j] = pairs[idx];
    if (i >= left_len || j >= right_len)
      throw ShapeMismatch("alignment pair out of range");
    if (idx > 0 && (pairs[idx - 1].first >= i || pairs[idx - 1].second >= j))
      throw ShapeMismatch("alignment pairs must strictly increase in both coordinates");
  }
}

size_t alignment_cost(const Alignment& al, const SymbolString& a, const SymbolString& b) {
  if (al.left_len != a.size() || al.right_len != b.size())
    throw ShapeMismatch("alignment shape does not match the strings");
  size_t mismatched = 0;
  for (auto [i, j] : al.pairs)
    if (a[i] != b[j]) ++mismatched;
  return (a.size() - al.pairs.size()) + (b.size() - al.pairs.size()) + mismatched;
}

Alignment optimal_alignment(const SymbolString& a, const SymbolString& b) {
  const size_t n = a.size(), m = b.size();
  std::vector<uint32_t> dp((n + 1) * (m + 1));
  auto at = [&](size_t i, size_t j) -> uint32_t& { return dp[i * (m + 1) + j]; };
  for (size_t j = 0; j <= m; ++j) at(0, j) = static_cast<uint32_t>(j);
  for (size_t i = 1; i <= n; ++i) {
    at(i, 0) = static_cast<uint32_t>(i);
    for (size_t j = 1; j <= m; ++j) {
      uint32_t best = at(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
      best = std::min(best, at(i - 1, j) + 1);
      best = std::min(best, at(i, j - 1) + 1);
      at(i, j) = best;
    }
  }

  std::vector<std::pair<size_t, size_t>> pairs;
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        at(i, j) == at(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1)) {
      pairs.emplace_back(i - 1, j - 1);
      --i, --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      --i;  // delete from left
    } else {
      --j;  // insert
    }
  }
  std::reverse(pairs.begin(), pairs.end());
  return Alignment(n, m, std::move(pairs));
}

}  // namespace hardstrings
