#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "hardstrings/distance.hpp"
#include "hardstrings/symbols.hpp"

using namespace hardstrings;

namespace {

// Plain full-table edit distance, kept independent of the library's banded
// implementation so the two can cross-check each other.
size_t full_dp_edit_distance(const SymbolString& a, const SymbolString& b) {
  const size_t n = a.size(), m = b.size();
  std::vector<size_t> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = j;
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= m; ++j) {
      cur[j] = std::min({prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1),
                         prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

// Enumerates every monotone non-crossing partial matching and reports the
// minimum alignment cost.  Each matching is visited exactly once because
// pairs are appended in increasing order of both coordinates.
size_t min_cost_by_enumeration(const SymbolString& a, const SymbolString& b) {
  size_t best = a.size() + b.size();  // empty alignment
  std::vector<std::pair<size_t, size_t>> cur;
  auto rec = [&](auto&& self, size_t i, size_t j) -> void {
    best = std::min(best, alignment_cost(Alignment(a.size(), b.size(), cur), a, b));
    for (size_t ii = i; ii < a.size(); ++ii)
      for (size_t jj = j; jj < b.size(); ++jj) {
        cur.emplace_back(ii, jj);
        self(self, ii + 1, jj + 1);
        cur.pop_back();
      }
  };
  rec(rec, 0, 0);
  return best;
}

SymbolString random_letters(std::mt19937& rng, size_t max_len, int alphabet) {
  std::uniform_int_distribution<size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> sym_dist(0, alphabet - 1);
  size_t len = len_dist(rng);
  SymbolString out;
  for (size_t i = 0; i < len; ++i) out.push_back(Symbol::letter(sym_dist(rng)));
  return out;
}

SymbolString random_bits(std::mt19937& rng, size_t len) {
  std::uniform_int_distribution<int> bit(0, 1);
  SymbolString out;
  for (size_t i = 0; i < len; ++i) out.push_back(Symbol::from_bit(bit(rng)));
  return out;
}

}  // namespace

TEST_CASE("symbol basics and ordering") {
  CHECK(Symbol::zero().is_binary());
  CHECK(Symbol::one().bit() == 1);
  CHECK(Symbol::dollar().is_gap());
  CHECK(Symbol::hash_mark().is_gap());
  CHECK(Symbol::stopper(3).stopper_level() == 3);
  CHECK(Symbol::letter(2).letter_code() == 2);
  CHECK(Symbol::stopper(1) != Symbol::stopper(2));  // full-tag equality
  CHECK(Symbol::zero() != Symbol::letter(0));
  CHECK_THROWS_AS(Symbol::stopper(0), InvalidLevel);
  CHECK_THROWS_AS(Symbol::letter(-1), ParamError);
}

TEST_CASE("symbol token round-trip") {
  std::vector<Symbol> syms = {Symbol::zero(), Symbol::one(), Symbol::dollar(),
                              Symbol::hash_mark(), Symbol::stopper(7), Symbol::letter(25)};
  for (Symbol s : syms) CHECK(Symbol::parse_token(s.token()) == s);
  CHECK(Symbol::stopper(3).token() == "c3");
  CHECK(Symbol::letter(0).token() == "l0");
  CHECK_THROWS_AS(Symbol::parse_token("x"), FormatError);
  CHECK_THROWS_AS(Symbol::parse_token("c"), FormatError);
  CHECK_THROWS_AS(Symbol::parse_token("c1x"), FormatError);
}

TEST_CASE("string encodings round-trip") {
  SymbolString s = SymbolString::bits("0101");
  CHECK(s.encode_compact() == "0101");
  CHECK(SymbolString::decode_compact("0101") == s);
  CHECK(SymbolString::decode_tokens(s.encode_tokens()) == s);

  SymbolString g = SymbolString::gaps("$#$#");
  CHECK(g.encode_compact() == "$#$#");
  CHECK(SymbolString::decode_compact(g.encode_compact()) == g);

  SymbolString t = SymbolString::bits("0");
  t.push_back(Symbol::stopper(1));
  t.push_back(Symbol::letter(4));
  CHECK(t.encode_tokens() == "0 c1 l4");
  CHECK(SymbolString::decode_tokens(t.encode_tokens()) == t);
  CHECK_FALSE(t.compactable());
  CHECK_THROWS_AS(t.encode_compact(), FormatError);
  CHECK_THROWS_AS(SymbolString::decode_compact("01a"), FormatError);
}

TEST_CASE("hamming distance") {
  CHECK(hamming(SymbolString::bits("0101"), SymbolString::bits("0101")) == 0);
  CHECK(hamming(SymbolString::bits("10"), SymbolString::bits("01")) == 2);
  CHECK(hamming(SymbolString::letters("aabcab"), SymbolString::letters("aacccc")) == 3);
  CHECK_THROWS_AS(hamming(SymbolString::bits("0"), SymbolString::bits("01")), LengthMismatch);
}

TEST_CASE("edit distance on worked examples") {
  SymbolString t = SymbolString::letters("aabcab");
  SymbolString s = SymbolString::letters("aacccc");
  CHECK(edit_distance(t, t) == 0);
  CHECK(edit_distance(SymbolString(), SymbolString::letters("ab")) == 2);
  CHECK(full_dp_edit_distance(t, s) == 3);  // independent oracle
  CHECK(edit_distance(t, s) == 3);
}

TEST_CASE("alignment cost matches the worked alignment") {
  SymbolString t = SymbolString::letters("aabcab");
  SymbolString s = SymbolString::letters("aacccc");
  // Pairs (1,2),(3,4),(4,6) in 1-based coordinates.
  Alignment al(6, 6, {{0, 1}, {2, 3}, {3, 5}});
  CHECK(alignment_cost(al, t, s) == 7);

  Alignment identity(4, 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  SymbolString x = SymbolString::bits("0110");
  CHECK(alignment_cost(identity, x, x) == 0);

  Alignment empty_al(3, 4, {});
  CHECK(alignment_cost(empty_al, SymbolString::letters("abc"), SymbolString::letters("abcd")) == 7);

  CHECK_THROWS_AS(alignment_cost(empty_al, x, x), ShapeMismatch);
}

TEST_CASE("alignment invariants are enforced") {
  CHECK_THROWS_AS(Alignment(2, 2, {{0, 0}, {1, 0}}), ShapeMismatch);  // not increasing
  CHECK_THROWS_AS(Alignment(2, 2, {{0, 1}, {1, 1}}), ShapeMismatch);  // reused position
  CHECK_THROWS_AS(Alignment(2, 2, {{2, 0}}), ShapeMismatch);          // out of range
}

TEST_CASE("optimal alignment achieves the edit distance") {
  SymbolString a = SymbolString::letters("ab");
  SymbolString b = SymbolString::letters("b");
  Alignment al = optimal_alignment(a, b);
  CHECK(alignment_cost(al, a, b) == 1);
  REQUIRE(al.pairs.size() == 1);
  CHECK(al.pairs[0] == std::pair<size_t, size_t>(1, 0));  // the two b's

  SymbolString t = SymbolString::letters("aabcab");
  SymbolString s = SymbolString::letters("aacccc");
  CHECK(alignment_cost(optimal_alignment(t, s), t, s) == 3);
  CHECK(alignment_cost(optimal_alignment(t, t), t, t) == 0);
}

TEST_CASE("edit distance equals exhaustive minimum alignment cost") {
  // Exhaustive over every pair with lengths <= 2 over {a,b,c}.
  std::vector<SymbolString> small;
  small.push_back(SymbolString());
  for (int c0 = 0; c0 < 3; ++c0) {
    SymbolString s1;
    s1.push_back(Symbol::letter(c0));
    small.push_back(s1);
    for (int c1 = 0; c1 < 3; ++c1) {
      SymbolString s2 = s1;
      s2.push_back(Symbol::letter(c1));
      small.push_back(s2);
    }
  }
  for (const auto& a : small)
    for (const auto& b : small) {
      size_t expect = min_cost_by_enumeration(a, b);
      CHECK(edit_distance(a, b) == expect);
    }

  // Randomized up to length 6 over the 3-symbol alphabet.
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 1500; ++trial) {
    SymbolString a = random_letters(rng, 6, 3);
    SymbolString b = random_letters(rng, 6, 3);
    size_t expect = min_cost_by_enumeration(a, b);
    CHECK(edit_distance(a, b) == expect);
    CHECK(alignment_cost(optimal_alignment(a, b), a, b) == expect);
  }
}

TEST_CASE("edit distance metric properties") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    SymbolString a = random_letters(rng, 10, 3);
    SymbolString b = random_letters(rng, 10, 3);
    SymbolString c = random_letters(rng, 10, 3);
    size_t ab = edit_distance(a, b);
    CHECK(ab == edit_distance(b, a));
    size_t len_gap = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
    CHECK(ab >= len_gap);
    CHECK(ab <= std::max(a.size(), b.size()));
    CHECK(edit_distance(a, c) <= ab + edit_distance(b, c));
  }
}

TEST_CASE("edit distance bounded by hamming on equal lengths") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    SymbolString a = random_bits(rng, 12);
    SymbolString b = random_bits(rng, 12);
    CHECK(edit_distance(a, b) <= hamming(a, b));
  }
}

TEST_CASE("banded edit distance agrees with the full table") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 800; ++trial) {
    SymbolString a = random_letters(rng, 24, 4);
    SymbolString b = random_letters(rng, 24, 4);
    size_t expect = full_dp_edit_distance(a, b);
    CHECK(edit_distance(a, b) == expect);
    // The bounded variant must be exact at or above the true distance and
    // saturate below it.
    CHECK(edit_distance_bounded(a, b, expect) == expect);
    if (expect > 0) CHECK(edit_distance_bounded(a, b, expect - 1) == expect);
  }
}
