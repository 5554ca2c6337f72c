#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hardstrings/counting.hpp"
#include "hardstrings/symbols.hpp"

namespace hardstrings {

// Default cap on brute-force enumerations (number of strings materialized or
// scanned); operations that would exceed it throw TooLarge.
inline constexpr size_t kDefaultEnumLimit = size_t{1} << 22;

// Block decomposition parameters: a binary string of length d viewed as
// k blocks of length b = d/k.
struct BlockParams {
  int k;  // even, >= 2
  int d;  // multiple of k
  int b;  // d/k, >= 2

  BlockParams(int k, int d);
};

// A binary string of length d carrying its block decomposition.
struct BlockString {
  BlockParams params;
  std::vector<uint8_t> bits;  // values 0/1, length d

  BlockString(BlockParams p, std::vector<uint8_t> bits);
  static BlockString from_bits(BlockParams p, std::string_view s);

  std::string bit_string() const;
  SymbolString to_symbols() const;

  // Number of set bits in block `blk` (0-based).
  int block_weight(int blk) const;
  // True when every block has exactly one set bit.
  bool is_base_shape() const;
  // True when k/2 blocks have one set bit and k/2 blocks have two.
  bool is_query_shape() const;

  friend bool operator==(const BlockString& a, const BlockString& b) {
    return a.bits == b.bits;
  }
  friend auto operator<=>(const BlockString& a, const BlockString& b) {
    return a.bits <=> b.bits;
  }
};

size_t hamming(const BlockString& a, const BlockString& b);

// All distinct strings with k/2 single-bit blocks and k/2 double-bit blocks,
// in ascending bit-string order.
std::vector<BlockString> enumerate_queries(const BlockParams& p,
                                           size_t limit = kDefaultEnumLimit);

// The generation-sequence count C(k,k/2) * b^k * (b-1)^(k/2).  Counts ordered
// choices of the extra bit in double blocks, so it exceeds the number of
// distinct strings by a factor of exactly 2^(k/2).
BigInt count_queries_paper(const BlockParams& p);

// Number of distinct query strings: C(k,k/2) * b^(k/2) * C(b,2)^(k/2).
BigInt count_queries_distinct(const BlockParams& p);

// All b^k strings with exactly one set bit per block, ascending.
std::vector<BlockString> enumerate_base_strings(const BlockParams& p,
                                                size_t limit = kDefaultEnumLimit);

// alpha = log_{d/k}(log2(n) / k), all logarithms base 2.  Display-only value;
// everything that feeds back into integer parameters is floored explicitly.
double compute_alpha(uint64_t n, int k, int d);

// 1 / sum_{i=0}^{radius} C(d, i), exact.
Rational select_probability(int d, int radius);

// The radius |_ k * (1/4 - alpha) _| clamped to >= 0.
int default_prune_radius(uint64_t n, int k, int d);

struct DictionaryConfig {
  BlockParams params;
  Rational select_prob;  // in (0, 1]
  int prune_radius;      // in [0, d]
  uint64_t seed;
};

// Bernoulli filter over the base strings (deterministic per string index),
// then one pruning pass deleting both members of every pair at Hamming
// distance <= prune_radius.
std::vector<BlockString> generate_dictionary(const DictionaryConfig& cfg,
                                             size_t limit = kDefaultEnumLimit);

// Exact number of base strings at Hamming distance exactly delta from a
// query-shaped P, by the block decomposition: delta = 2x- + 3y- + y+ with
// x- + y- = delta/2 - k/4, summing
// C(k/2,x-) * C(k/2,y-) * (b-1)^x- * (b-2)^y- * 2^(k/2 - y-).
BigInt count_within_ball_closed_form(const BlockString& P, int delta);

// |{base S : hamming(P, S) <= radius}| by enumeration.
size_t count_within_ball_brute(const BlockString& P, int radius,
                               size_t limit = kDefaultEnumLimit);

// |{query-shaped P : hamming(P,S1) <= radius and hamming(P,S2) <= radius}|.
size_t intersection_count_brute(const BlockString& s1, const BlockString& s2, int radius,
                                size_t limit = kDefaultEnumLimit);

// The per-(delta1, delta2) intersection bound: sum over w from 0 to
// min{z + (d1-d2)/2, d1/2 - k/4} of A_w * B_w * C_w * D_w with
//   A_w = C(2z, z + (d1-d2)/2),
//   B_w = C(k, d1/2 - k/4 - w),
//   C_w = C(k, k/2),
//   D_w = (d/k)^(d2/2 + k/4 - (z - w)).
// Terms with non-integer binomial arguments or power exponents contribute 0.
Rational intersection_upper_bound(int64_t z, int64_t delta1, int64_t delta2,
                                  const BlockParams& p);

// Index w maximizing the bound term at delta1 = delta2 = k; requires k
// divisible by 4.  Ties resolve to the largest maximizing index.
int64_t argmax_w(int64_t z, const BlockParams& p);

struct BoundsReport {
  uint64_t n = 0;  // total dictionary length
  int k = 0, d = 0;
  int radius = 0;
  double alpha = 0.0;
  Rational p_alpha;
  // t >= p_alpha * 2^(k/4) * C(k,k/4) * (b-2)^(k/4); needs 4 | k.
  std::optional<Rational> t_lower;
  // v * |Q| <= k^2 * (k/4) * C(k/8,k/16) * C(k,3k/16) * C(k,k/2) * b^(3k/4);
  // needs 16 | k.
  std::optional<BigInt> v_upper_times_q;
  // t_lower / (v_upper_times_q / |Q|) with |Q| the distinct count.
  std::optional<Rational> space_ratio;
};

// Evaluates the report formulas exactly; fields whose divisibility
// preconditions fail stay undefined rather than being rounded.
BoundsReport evaluate_bounds(uint64_t n, const BlockParams& p,
                             std::optional<int> radius_override = std::nullopt);

}  // namespace hardstrings
