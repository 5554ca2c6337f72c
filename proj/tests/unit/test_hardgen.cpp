#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hardstrings/counting.hpp"
#include "hardstrings/hardgen.hpp"

using namespace hardstrings;

namespace {

std::vector<std::string> bit_strings(const std::vector<BlockString>& v) {
  std::vector<std::string> out;
  for (const BlockString& b : v) out.push_back(b.bit_string());
  return out;
}

}  // namespace

TEST_CASE("block params validation") {
  const BlockParams p(2, 4);
  CHECK(p.b == 2);
  CHECK_THROWS_AS(BlockParams(3, 6), ParamError);   // odd k
  CHECK_THROWS_AS(BlockParams(0, 4), ParamError);
  CHECK_THROWS_AS(BlockParams(2, 5), ParamError);   // k does not divide d
  CHECK_THROWS_AS(BlockParams(2, 2), ParamError);   // b = 1
  CHECK_THROWS_AS(BlockParams(-2, 4), ParamError);
}

TEST_CASE("block string shapes") {
  const BlockParams p(2, 4);
  const BlockString base = BlockString::from_bits(p, "1010");
  const BlockString query = BlockString::from_bits(p, "1011");
  CHECK(base.is_base_shape());
  CHECK_FALSE(base.is_query_shape());
  CHECK(query.is_query_shape());
  CHECK_FALSE(query.is_base_shape());
  CHECK(base.block_weight(0) == 1);
  CHECK(query.block_weight(1) == 2);
  CHECK(hamming(base, query) == 1);
}

TEST_CASE("query enumeration") {
  const std::vector<BlockString> q = enumerate_queries(BlockParams(2, 4));
  CHECK(bit_strings(q) == std::vector<std::string>{"0111", "1011", "1101", "1110"});
  CHECK(enumerate_queries(BlockParams(2, 8)).size() == 48);
  CHECK_THROWS_AS(enumerate_queries(BlockParams(2, 4), 3), TooLarge);
  for (const BlockString& s : enumerate_queries(BlockParams(4, 8)))
    CHECK(s.is_query_shape());
}

TEST_CASE("query counting and the generation-sequence overcount") {
  CHECK(count_queries_paper(BlockParams(2, 4)) == 8);
  CHECK(count_queries_paper(BlockParams(2, 8)) == 96);
  CHECK(count_queries_paper(BlockParams(4, 8)) == 96);
  CHECK(count_queries_distinct(BlockParams(2, 4)) == 4);
  for (const BlockParams p : {BlockParams(2, 4), BlockParams(2, 8), BlockParams(4, 8),
                              BlockParams(4, 16), BlockParams(6, 12)}) {
    CAPTURE(p.k);
    CAPTURE(p.d);
    CHECK(count_queries_paper(p) ==
          ipow(2, static_cast<uint64_t>(p.k / 2)) * count_queries_distinct(p));
  }
  CHECK(BigInt(enumerate_queries(BlockParams(4, 8)).size()) ==
        count_queries_distinct(BlockParams(4, 8)));
}

TEST_CASE("base string enumeration") {
  const std::vector<BlockString> b = enumerate_base_strings(BlockParams(2, 4));
  CHECK(bit_strings(b) == std::vector<std::string>{"0101", "0110", "1001", "1010"});
  CHECK(enumerate_base_strings(BlockParams(2, 8)).size() == 16);
  for (const BlockString& s : enumerate_base_strings(BlockParams(4, 8)))
    CHECK(s.is_base_shape());
}

TEST_CASE("alpha and selection probability") {
  CHECK(compute_alpha(uint64_t{1} << 16, 4, 16) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(compute_alpha(uint64_t{1} << 16, 16, 32) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(compute_alpha(1, 4, 16), ParamError);
  CHECK_THROWS_AS(compute_alpha(1 << 16, 4, 4), ParamError);  // d/k == 1

  CHECK(select_probability(16, 0) == Rational(1));
  CHECK(select_probability(16, 1) == Rational(1, 17));
  CHECK(select_probability(4, 2) == Rational(1, 11));
  CHECK_THROWS_AS(select_probability(4, 5), ParamError);  // radius > d
  CHECK_THROWS_AS(select_probability(4, -1), ParamError);

  CHECK(default_prune_radius(uint64_t{1} << 16, 4, 16) == 0);  // alpha = 1
  CHECK(default_prune_radius(16, 4, 1024) == 1);               // alpha = 0
}

TEST_CASE("dictionary generation") {
  const BlockParams p(2, 4);
  SUBCASE("probability one keeps every base string at radius zero") {
    const DictionaryConfig cfg{p, Rational(1), 0, 7};
    CHECK(bit_strings(generate_dictionary(cfg)) ==
          std::vector<std::string>{"0101", "0110", "1001", "1010"});
  }
  SUBCASE("radius two prunes all four base strings") {
    const DictionaryConfig cfg{p, Rational(1), 2, 7};
    CHECK(generate_dictionary(cfg).empty());
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(generate_dictionary(DictionaryConfig{p, Rational(0), 0, 0}), ParamError);
    CHECK_THROWS_AS(generate_dictionary(DictionaryConfig{p, Rational(3, 2), 0, 0}),
                    ParamError);
    CHECK_THROWS_AS(generate_dictionary(DictionaryConfig{p, Rational(1), 5, 0}), ParamError);
    CHECK_THROWS_AS(generate_dictionary(DictionaryConfig{p, Rational(1), -1, 0}), ParamError);
  }
  SUBCASE("deterministic in the seed, and the seed matters") {
    const BlockParams big(2, 8);
    const DictionaryConfig a{big, Rational(1, 2), 0, 42};
    const DictionaryConfig b{big, Rational(1, 2), 0, 43};
    CHECK(bit_strings(generate_dictionary(a)) == bit_strings(generate_dictionary(a)));
    CHECK(bit_strings(generate_dictionary(a)) != bit_strings(generate_dictionary(b)));
  }
  SUBCASE("output is a pruned subset of the base strings") {
    const BlockParams big(4, 8);
    const std::vector<std::string> all = bit_strings(enumerate_base_strings(big));
    for (uint64_t seed = 0; seed < 20; ++seed) {
      const DictionaryConfig cfg{big, Rational(2, 3), 2, seed};
      const std::vector<BlockString> dict = generate_dictionary(cfg);
      for (const BlockString& s : dict)
        CHECK(std::count(all.begin(), all.end(), s.bit_string()) == 1);
      for (size_t i = 0; i < dict.size(); ++i)
        for (size_t j = i + 1; j < dict.size(); ++j)
          CHECK(hamming(dict[i], dict[j]) > 2);
    }
  }
}

TEST_CASE("ball counts: closed form vs enumeration") {
  const BlockParams p(2, 4);
  const BlockString q = BlockString::from_bits(p, "1110");
  CHECK(count_within_ball_closed_form(q, 0) == 0);
  CHECK(count_within_ball_closed_form(q, 1) == 2);
  CHECK(count_within_ball_closed_form(q, 2) == 0);
  CHECK(count_within_ball_closed_form(q, 3) == 2);
  CHECK_THROWS_AS(count_within_ball_closed_form(BlockString::from_bits(p, "1010"), 1),
                  ShapeError);
  CHECK_THROWS_AS(count_within_ball_brute(q, -1), ParamError);

  CHECK(count_within_ball_brute(q, 2) == 2);
  CHECK(count_within_ball_brute(q, 4) == 4);
  CHECK(count_within_ball_brute(q, 0) == 0);
  CHECK_THROWS_AS(count_within_ball_brute(q, 2, 3), TooLarge);

  // Full per-distance histograms at the three tested parameter pairs.
  for (const BlockParams params : {BlockParams(2, 8), BlockParams(4, 8), BlockParams(4, 16)}) {
    CAPTURE(params.k);
    CAPTURE(params.d);
    const std::vector<BlockString> bases = enumerate_base_strings(params);
    for (const BlockString& query : enumerate_queries(params)) {
      std::map<int, BigInt> histogram;
      for (const BlockString& s : bases) ++histogram[static_cast<int>(hamming(query, s))];
      for (int delta = 0; delta <= 3 * params.k; ++delta) {
        const BigInt brute = histogram.count(delta) ? histogram[delta] : BigInt(0);
        REQUIRE(count_within_ball_closed_form(query, delta) == brute);
      }
      // Distance parity: delta >= k/2 and delta == k/2 (mod 2).
      for (const auto& entry : histogram) {
        REQUIRE(entry.first >= params.k / 2);
        REQUIRE((entry.first - params.k / 2) % 2 == 0);
      }
    }
  }
}

TEST_CASE("intersection counts and the per-pair upper bound") {
  const BlockParams p(2, 4);
  const BlockString s1 = BlockString::from_bits(p, "1010");
  const BlockString s2 = BlockString::from_bits(p, "0101");
  const BlockString s3 = BlockString::from_bits(p, "1001");
  CHECK(intersection_count_brute(s1, s2, 2) == 0);
  CHECK(intersection_count_brute(s1, s1, 4) == 4);
  CHECK(intersection_count_brute(s1, s3, 2) == 1);  // only 1011
  CHECK_THROWS_AS(intersection_count_brute(BlockString::from_bits(p, "1110"), s1, 2),
                  ShapeError);

  const BlockParams p16(4, 16);
  // Independent hand evaluation: both terms equal 2 * C(4,1-w) * 6 * 4^(2+w),
  // i.e. 768 each, so the sum is 1536.
  CHECK(intersection_upper_bound(1, 4, 4, p16) == Rational(1536));
  CHECK(intersection_upper_bound(1, 4, 4, p16) == Rational(2 * 768));
  CHECK(intersection_upper_bound(1, 3, 4, p16) == 0);  // odd delta difference
  CHECK(intersection_upper_bound(1, 3, 3, p16) == 0);  // (2*delta1 - k) % 4 != 0
  CHECK_THROWS_AS(intersection_upper_bound(-1, 4, 4, p16), ParamError);
  CHECK_THROWS_AS(intersection_upper_bound(1, 5, 4, p16), ParamError);  // delta1 > k

  // Maximization over the realized pairs: delta1 = delta2 = k dominates.
  for (const BlockParams params : {BlockParams(4, 8), BlockParams(4, 16)}) {
    for (int64_t z = 1; z <= 2; ++z) {
      const Rational top = intersection_upper_bound(z, params.k, params.k, params);
      for (int64_t d1 = 0; d1 <= params.k; ++d1)
        for (int64_t d2 = d1; d2 <= params.k; ++d2)
          CHECK(intersection_upper_bound(z, d1, d2, params) <= top);
    }
  }
}

TEST_CASE("intersection soundness on exhaustive small pairs") {
  const BlockParams p(4, 8);
  const std::vector<BlockString> bases = enumerate_base_strings(p);
  const std::vector<BlockString> queries = enumerate_queries(p);
  for (size_t i = 0; i < bases.size(); ++i) {
    for (size_t j = i + 1; j < bases.size(); ++j) {
      const BlockString& s1 = bases[i];
      const BlockString& s2 = bases[j];
      const int two_z = static_cast<int>(hamming(s1, s2));
      REQUIRE(two_z % 2 == 0);
      const int z = two_z / 2;
      std::map<std::pair<int, int>, int> realized;
      for (const BlockString& q : queries) {
        const int d1 = static_cast<int>(hamming(q, s1));
        const int d2 = static_cast<int>(hamming(q, s2));
        if (d1 > p.k || d2 > p.k) continue;
        ++realized[{d1, d2}];
        // xor-structure of every counted query (set-bit bookkeeping):
        int on_cut_matching = 0, ones_s1_zero_q = 0;
        for (int pos = 0; pos < p.d; ++pos) {
          const int qb = q.bits[pos], b1 = s1.bits[pos], b2 = s2.bits[pos];
          if (b1 != b2 && qb != b1) ++on_cut_matching;
          if (b1 == 1 && qb == 0) ++ones_s1_zero_q;
        }
        REQUIRE(on_cut_matching == z + (d1 - d2) / 2);
        REQUIRE(ones_s1_zero_q == d1 / 2 - p.k / 4);
      }
      // Upper bound summed over the realized (delta1, delta2) pairs.
      Rational bound = 0;
      for (const auto& [deltas, count] : realized)
        bound += intersection_upper_bound(z, deltas.first, deltas.second, p);
      CHECK(Rational(intersection_count_brute(s1, s2, p.k)) <= bound);
    }
  }
}

TEST_CASE("argmax over the dominant term") {
  CHECK(argmax_w(0, BlockParams(4, 16)) == 0);
  CHECK(argmax_w(1, BlockParams(4, 16)) == 1);  // tie of equal terms resolves upward
  CHECK(argmax_w(1, BlockParams(4, 8)) == 0);   // ratio below one favours w = 0
  CHECK_THROWS_AS(argmax_w(1, BlockParams(2, 4)), ParamError);  // k % 4 != 0
  CHECK_THROWS_AS(argmax_w(-1, BlockParams(4, 16)), ParamError);
}

TEST_CASE("bounds report") {
  const BoundsReport r = evaluate_bounds(uint64_t{1} << 16, BlockParams(4, 16), 1);
  CHECK(r.alpha == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.p_alpha == Rational(1, 17));
  REQUIRE(r.t_lower.has_value());
  CHECK(*r.t_lower == Rational(16, 17));
  CHECK_FALSE(r.v_upper_times_q.has_value());  // k = 4 is not divisible by 16
  CHECK_FALSE(r.space_ratio.has_value());

  // b = 2 makes the (b-2)^(k/4) factor vanish: defined but zero.
  const BoundsReport flat = evaluate_bounds(uint64_t{1} << 16, BlockParams(16, 32), 1);
  REQUIRE(flat.t_lower.has_value());
  CHECK(*flat.t_lower == 0);
  REQUIRE(flat.v_upper_times_q.has_value());
  CHECK(*flat.v_upper_times_q > 0);
  REQUIRE(flat.space_ratio.has_value());
  CHECK(*flat.space_ratio == 0);
  // Independent assembly of the v formula at k=16, d=32.
  const BigInt v_expected = BigInt(16 * 16) * 4 * binomial(2, 1) * binomial(16, 3) *
                            binomial(16, 8) * ipow(2, 12);
  CHECK(*flat.v_upper_times_q == v_expected);

  // b = 3 keeps every factor positive.
  const BoundsReport pos = evaluate_bounds(uint64_t{1} << 16, BlockParams(16, 48), 1);
  REQUIRE(pos.t_lower.has_value());
  CHECK(*pos.t_lower > 0);
  REQUIRE(pos.v_upper_times_q.has_value());
  CHECK(*pos.v_upper_times_q > 0);
  REQUIRE(pos.space_ratio.has_value());
  CHECK(*pos.space_ratio > 0);
}

TEST_CASE("binomial bounds self-test") {
  CHECK(binom_bounds_check(4, 2));
  CHECK(binom_bounds_check(10, 1));
  CHECK(binom_bounds_check(100, 7));
  CHECK(binom_bounds_check(1000, 30));
  CHECK_THROWS_AS(binom_bounds_check(5, 5), ParamError);
  CHECK_THROWS_AS(binom_bounds_check(5, 0), ParamError);
  CHECK_THROWS_AS(binom_bounds_check(3, 7), ParamError);
}
