#include "hardstrings/hardgen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "hardstrings/rng.hpp"

namespace hardstrings {

namespace {

// Exact Bernoulli(p) decision from one uniform 64-bit draw.
bool bernoulli_from_draw(uint64_t draw, const Rational& p) {
  const BigInt num = numerator(p);
  const BigInt den = denominator(p);
  return BigInt(draw) * den < num << 64;
}

void check_limit(const BigInt& size, size_t limit, const char* what) {
  if (size > BigInt(limit))
    throw TooLarge(std::string(what) + " would materialize " + size.str() +
                   " strings (limit " + std::to_string(limit) + ")");
}

}  // namespace

BlockParams::BlockParams(int k_, int d_) : k(k_), d(d_), b(0) {
  if (k < 2 || k % 2 != 0) throw ParamError("k must be even and >= 2");
  if (d < k || d % k != 0) throw ParamError("d must be a positive multiple of k");
  b = d / k;
  if (b < 2) throw ParamError("block length d/k must be >= 2");
}

BlockString::BlockString(BlockParams p, std::vector<uint8_t> bits_)
    : params(p), bits(std::move(bits_)) {
  if (bits.size() != static_cast<size_t>(params.d))
    throw ShapeError("bit count does not match d");
  for (uint8_t v : bits)
    if (v > 1) throw ShapeError("bits must be 0/1");
}

BlockString BlockString::from_bits(BlockParams p, std::string_view s) {
  std::vector<uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw ShapeError("bits must be 0/1");
    bits.push_back(c == '1');
  }
  return BlockString(p, std::move(bits));
}

std::string BlockString::bit_string() const {
  std::string out;
  out.reserve(bits.size());
  for (uint8_t v : bits) out.push_back(v ? '1' : '0');
  return out;
}

SymbolString BlockString::to_symbols() const {
  SymbolString out;
  for (uint8_t v : bits) out.push_back(Symbol::from_bit(v));
  return out;
}

int BlockString::block_weight(int blk) const {
  int w = 0;
  for (int i = 0; i < params.b; ++i) w += bits[blk * params.b + i];
  return w;
}

bool BlockString::is_base_shape() const {
  for (int blk = 0; blk < params.k; ++blk)
    if (block_weight(blk) != 1) return false;
  return true;
}

bool BlockString::is_query_shape() const {
  int singles = 0, doubles = 0;
  for (int blk = 0; blk < params.k; ++blk) {
    int w = block_weight(blk);
    if (w == 1) ++singles;
    else if (w == 2) ++doubles;
    else return false;
  }
  return singles == params.k / 2 && doubles == params.k / 2;
}

size_t hamming(const BlockString& a, const BlockString& b) {
  if (a.bits.size() != b.bits.size()) throw LengthMismatch("block strings differ in length");
  size_t count = 0;
  for (size_t i = 0; i < a.bits.size(); ++i)
    if (a.bits[i] != b.bits[i]) ++count;
  return count;
}

std::vector<BlockString> enumerate_queries(const BlockParams& p, size_t limit) {
  check_limit(count_queries_distinct(p), limit, "query enumeration");
  const int k = p.k, b = p.b;
  std::vector<BlockString> out;
  std::vector<uint8_t> bits(p.d, 0);

  // double_mask selects which blocks carry two set bits.
  auto fill_blocks = [&](auto&& self, int blk, uint64_t double_mask) -> void {
    if (blk == k) {
      out.emplace_back(p, bits);
      return;
    }
    uint8_t* block = bits.data() + blk * b;
    if (double_mask >> blk & 1) {
      for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j) {
          block[i] = block[j] = 1;
          self(self, blk + 1, double_mask);
          block[i] = block[j] = 0;
        }
    } else {
      for (int i = 0; i < b; ++i) {
        block[i] = 1;
        self(self, blk + 1, double_mask);
        block[i] = 0;
      }
    }
  };

  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) != k / 2) continue;
    fill_blocks(fill_blocks, 0, mask);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_queries_paper(const BlockParams& p) {
  return binomial(p.k, p.k / 2) * ipow(BigInt(p.b), p.k) * ipow(BigInt(p.b - 1), p.k / 2);
}

BigInt count_queries_distinct(const BlockParams& p) {
  return binomial(p.k, p.k / 2) * ipow(BigInt(p.b), p.k / 2) *
         ipow(binomial(p.b, 2), p.k / 2);
}

std::vector<BlockString> enumerate_base_strings(const BlockParams& p, size_t limit) {
  check_limit(ipow(BigInt(p.b), p.k), limit, "base-string enumeration");
  std::vector<BlockString> out;
  std::vector<uint8_t> bits(p.d, 0);
  auto fill = [&](auto&& self, int blk) -> void {
    if (blk == p.k) {
      out.emplace_back(p, bits);
      return;
    }
    for (int i = 0; i < p.b; ++i) {
      bits[blk * p.b + i] = 1;
      self(self, blk + 1);
      bits[blk * p.b + i] = 0;
    }
  };
  fill(fill, 0);
  std::sort(out.begin(), out.end());
  return out;
}

double compute_alpha(uint64_t n, int k, int d) {
  if (n < 2) throw ParamError("alpha needs n >= 2");
  if (k < 1) throw ParamError("alpha needs k >= 1");
  if (d < 2 * k) throw ParamError("alpha needs d/k >= 2");
  const double log_n = std::log2(static_cast<double>(n));
  return (std::log2(log_n) - std::log2(static_cast<double>(k))) /
         (std::log2(static_cast<double>(d)) - std::log2(static_cast<double>(k)));
}

Rational select_probability(int d, int radius) {
  if (d < 1) throw ParamError("select probability needs d >= 1");
  if (radius < 0 || radius > d) throw ParamError("radius must be in [0, d]");
  BigInt sum = 0;
  for (int i = 0; i <= radius; ++i) sum += binomial(d, i);
  return Rational(1, sum);
}

int default_prune_radius(uint64_t n, int k, int d) {
  const double alpha = compute_alpha(n, k, d);
  const double raw = std::floor(k * (0.25 - alpha));
  int radius = raw < 0 ? 0 : static_cast<int>(raw);
  return std::min(radius, d);
}

std::vector<BlockString> generate_dictionary(const DictionaryConfig& cfg, size_t limit) {
  if (cfg.select_prob <= 0 || cfg.select_prob > 1)
    throw ParamError("select_prob must be in (0, 1]");
  if (cfg.prune_radius < 0 || cfg.prune_radius > cfg.params.d)
    throw ParamError("prune_radius must be in [0, d]");

  const auto base = enumerate_base_strings(cfg.params, limit);
  std::vector<BlockString> survivors;
  for (size_t i = 0; i < base.size(); ++i) {
    uint64_t draw = splitmix64(cfg.seed + 0x9e3779b97f4a7c15ULL * (i + 1));
    if (bernoulli_from_draw(draw, cfg.select_prob)) survivors.push_back(base[i]);
  }

  // One pass over all pairs of survivors; both members of a close pair go.
  std::vector<char> doomed(survivors.size(), 0);
  for (size_t i = 0; i < survivors.size(); ++i)
    for (size_t j = i + 1; j < survivors.size(); ++j)
      if (hamming(survivors[i], survivors[j]) <= static_cast<size_t>(cfg.prune_radius))
        doomed[i] = doomed[j] = 1;

  std::vector<BlockString> out;
  for (size_t i = 0; i < survivors.size(); ++i)
    if (!doomed[i]) out.push_back(survivors[i]);
  return out;
}

BigInt count_within_ball_closed_form(const BlockString& P, int delta) {
  if (!P.is_query_shape()) throw ShapeError("P must have the query block shape");
  const int k = P.params.k, b = P.params.b;
  if (delta < 0) return 0;
  const int shifted = 2 * delta - k;  // 4 * (delta/2 - k/4)
  if (shifted < 0 || shifted % 4 != 0) return 0;
  const int s = shifted / 4;  // x- + y-
  BigInt total = 0;
  for (int xm = std::max(0, s - k / 2); xm <= std::min(s, k / 2); ++xm) {
    const int ym = s - xm;
    if (ym < 0 || ym > k / 2) continue;
    total += binomial(k / 2, xm) * binomial(k / 2, ym) * ipow(BigInt(b - 1), xm) *
             ipow(BigInt(b - 2), ym) * ipow(BigInt(2), k / 2 - ym);
  }
  return total;
}

size_t count_within_ball_brute(const BlockString& P, int radius, size_t limit) {
  if (radius < 0) throw ParamError("radius must be >= 0");
  size_t count = 0;
  for (const auto& s : enumerate_base_strings(P.params, limit))
    if (hamming(P, s) <= static_cast<size_t>(radius)) ++count;
  return count;
}

size_t intersection_count_brute(const BlockString& s1, const BlockString& s2, int radius,
                                size_t limit) {
  if (radius < 0) throw ParamError("radius must be >= 0");
  if (!s1.is_base_shape() || !s2.is_base_shape())
    throw ShapeError("intersection counting expects base strings");
  size_t count = 0;
  for (const auto& q : enumerate_queries(s1.params, limit))
    if (hamming(q, s1) <= static_cast<size_t>(radius) &&
        hamming(q, s2) <= static_cast<size_t>(radius))
      ++count;
  return count;
}

Rational intersection_upper_bound(int64_t z, int64_t delta1, int64_t delta2,
                                  const BlockParams& p) {
  if (z < 0) throw ParamError("z must be >= 0");
  if (delta1 < 0 || delta2 < 0 || delta1 > p.k || delta2 > p.k)
    throw ParamError("delta1, delta2 must be in [0, k]");
  // Non-integer binomial arguments make every term vanish.
  if ((delta1 - delta2) % 2 != 0) return 0;
  if ((2 * delta1 - p.k) % 4 != 0) return 0;
  const int64_t shift = (delta1 - delta2) / 2;       // A's offset
  const int64_t b_top = (2 * delta1 - p.k) / 4;      // delta1/2 - k/4
  const int64_t d_base_exp = (2 * delta2 + p.k) / 4; // delta2/2 + k/4
  const int64_t w_max = std::min(z + shift, b_top);
  Rational total = 0;
  for (int64_t w = 0; w <= w_max; ++w) {
    BigInt a = binomial(2 * z, z + shift);
    BigInt b = binomial(p.k, b_top - w);
    BigInt c = binomial(p.k, p.k / 2);
    Rational d = rpow(Rational(p.b), d_base_exp - (z - w));
    total += Rational(a * b * c) * d;
  }
  return total;
}

int64_t argmax_w(int64_t z, const BlockParams& p) {
  if (z < 0) throw ParamError("z must be >= 0");
  if (p.k % 4 != 0) throw ParamError("argmax_w needs k divisible by 4");
  const int64_t w_max = std::min(z, static_cast<int64_t>(p.k / 4));
  Rational best = -1;
  int64_t best_w = 0;
  for (int64_t w = 0; w <= w_max; ++w) {
    Rational term = Rational(binomial(2 * z, z) * binomial(p.k, p.k / 4 - w) *
                             binomial(p.k, p.k / 2)) *
                    rpow(Rational(p.b), 3 * (p.k / 4) - z + w);
    if (term >= best) {  // ties resolve to the largest w
      best = term;
      best_w = w;
    }
  }
  return best_w;
}

BoundsReport evaluate_bounds(uint64_t n, const BlockParams& p,
                             std::optional<int> radius_override) {
  BoundsReport report;
  report.n = n;
  report.k = p.k;
  report.d = p.d;
  report.alpha = compute_alpha(n, p.k, p.d);
  report.radius = radius_override ? *radius_override : default_prune_radius(n, p.k, p.d);
  report.p_alpha = select_probability(p.d, report.radius);

  if (p.k % 4 == 0) {
    report.t_lower = report.p_alpha * rpow(Rational(2), p.k / 4) *
                     Rational(binomial(p.k, p.k / 4)) *
                     rpow(Rational(p.b - 2), p.k / 4);
  }
  if (p.k % 16 == 0) {
    report.v_upper_times_q = BigInt(p.k) * p.k * (p.k / 4) *
                             binomial(p.k / 8, p.k / 16) *
                             binomial(p.k, 3 * p.k / 16) * binomial(p.k, p.k / 2) *
                             ipow(BigInt(p.b), 3 * (p.k / 4));
  }
  if (report.t_lower && report.v_upper_times_q) {
    report.space_ratio = *report.t_lower * Rational(count_queries_distinct(p)) /
                         Rational(*report.v_upper_times_q);
  }
  return report;
}

}  // namespace hardstrings
