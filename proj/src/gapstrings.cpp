#include "hardstrings/gapstrings.hpp"

#include <bit>
#include <string>

#include "hardstrings/errors.hpp"
#include "hardstrings/rng.hpp"

namespace hardstrings {

namespace {

// Lexicographically smallest irreducible polynomial of each degree over
// GF(2), as a full bitmask including the leading term; index is the degree.
// Degree 1 keeps x+1 rather than x; products of constants never reach the
// reduction step, so the choice only affects the table's self-description.
constexpr uint32_t kIrreducible[17] = {
    0,       0x3,    0x7,    0xb,    0x13,   0x25,   0x43,    0x83,  0x11b,
    0x203,   0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003,  0x1002b,
};

void check_gap_d(int d) {
  if (d < 1) throw ParamError("gap parameter d must be >= 1, got " + std::to_string(d));
}

void check_gap_shape(const SymbolString& g, int d) {
  if (static_cast<int>(g.size()) != 2 * d)
    throw ShapeError("gap string must have length 2d = " + std::to_string(2 * d) +
                     ", got " + std::to_string(g.size()));
  if (!g.all_gap())
    throw ShapeError("gap strings may only use the symbols $ and #");
}

// Gap property on a raw 0/1 encoding ($ = 0, # = 1); on failure stores the
// first violating prefix length in *bad_i.
bool gap_bits_ok(const std::vector<uint8_t>& bits, int d, int* bad_i) {
  const int n = 2 * d;
  const int threshold = d / 2 + 1;
  for (int i = (3 * d + 1) / 2; i <= n - 1; ++i) {
    int mismatches = 0;
    for (int p = 0; p < i && mismatches < threshold; ++p)
      mismatches += bits[p] != bits[n - i + p];
    if (mismatches < threshold) {
      if (bad_i) *bad_i = i;
      return false;
    }
  }
  return true;
}

std::vector<uint8_t> gap_to_bits(const SymbolString& g) {
  std::vector<uint8_t> bits(g.size());
  for (size_t p = 0; p < g.size(); ++p) bits[p] = g[p].is_hash() ? 1 : 0;
  return bits;
}

SymbolString bits_to_gap(const std::vector<uint8_t>& bits) {
  SymbolString s;
  for (uint8_t b : bits) s.push_back(b ? Symbol::hash_mark() : Symbol::dollar());
  return s;
}

int ceil_log2(uint64_t v) {
  return v <= 1 ? 0 : std::bit_width(v - 1);
}

}  // namespace

namespace gf2 {

uint32_t irreducible_poly(int m) {
  if (m < 1 || m > 16)
    throw ParamError("field degree must be in [1, 16], got " + std::to_string(m));
  return kIrreducible[m];
}

uint64_t mul(uint64_t a, uint64_t b, int m) {
  const uint32_t poly = irreducible_poly(m);
  uint64_t prod = 0;
  for (int i = 0; i < m; ++i)
    if ((a >> i) & 1) prod ^= b << i;
  for (int bit = 2 * m - 2; bit >= m; --bit)
    if ((prod >> bit) & 1) prod ^= static_cast<uint64_t>(poly) << (bit - m);
  return prod;
}

}  // namespace gf2

namespace {

std::vector<uint8_t> kwise_bits_raw(uint64_t seed, int independence, size_t count) {
  const int m = std::max(1, ceil_log2(count));
  const int t = independence;

  // Coefficient bits: the 64 seed bits (low first), then splitmix64 words.
  const size_t need = static_cast<size_t>(t) * m;
  std::vector<uint8_t> stream;
  stream.reserve(need);
  for (int i = 0; i < 64 && stream.size() < need; ++i) stream.push_back((seed >> i) & 1);
  SplitMix ext(seed);
  while (stream.size() < need) {
    uint64_t w = ext.next();
    for (int i = 0; i < 64 && stream.size() < need; ++i) stream.push_back((w >> i) & 1);
  }

  std::vector<uint64_t> coeff(t, 0);
  for (int l = 0; l < t; ++l)
    for (int i = 0; i < m; ++i)
      coeff[l] |= static_cast<uint64_t>(stream[static_cast<size_t>(l) * m + i]) << i;

  std::vector<uint8_t> out(count);
  for (size_t j = 0; j < count; ++j) {
    uint64_t y = 0;
    for (int l = t - 1; l >= 0; --l) y = gf2::mul(y, j, m) ^ coeff[l];
    out[j] = y & 1;
  }
  return out;
}

}  // namespace

SymbolString kwise_bits(uint64_t seed, int independence, size_t count) {
  if (independence < 1)
    throw ParamError("independence must be >= 1, got " + std::to_string(independence));
  if (count < 1) throw ParamError("count must be >= 1");
  if (count > (size_t{1} << 16))
    throw TooLarge("kwise_bits supports at most 2^16 positions, got " +
                   std::to_string(count));
  SymbolString s;
  for (uint8_t b : kwise_bits_raw(seed, independence, count))
    s.push_back(Symbol::from_bit(b));
  return s;
}

GapString edit_gap(int d) {
  check_gap_d(d);
  SymbolString s;
  for (int i = 0; i < d; ++i) s.push_back(Symbol::dollar());
  for (int i = 0; i < d; ++i) s.push_back(Symbol::hash_mark());
  return GapString{std::move(s), d, GapMode::Edit};
}

bool verify_gap(const SymbolString& g, int d) {
  return !gap_counterexample(g, d).has_value();
}

std::optional<int> gap_counterexample(const SymbolString& g, int d) {
  check_gap_d(d);
  check_gap_shape(g, d);
  int bad_i = 0;
  if (gap_bits_ok(gap_to_bits(g), d, &bad_i)) return std::nullopt;
  return bad_i;
}

GapString mismatch_gap(int d, GapStrategy strategy, uint64_t seed, uint64_t budget) {
  if (d < 2) throw ParamError("mismatch gaps need d >= 2, got " + std::to_string(d));
  const int n = 2 * d;
  uint64_t examined = 0;
  std::vector<uint8_t> bits(n);

  if (strategy == GapStrategy::Exhaustive) {
    if (n > 62)
      throw TooLarge("exhaustive gap search needs 2d <= 62; use RandomRetry or KWise");
    const uint64_t space = uint64_t{1} << n;
    for (uint64_t mask = 0; mask < space && examined < budget; ++mask, ++examined) {
      for (int p = 0; p < n; ++p) bits[p] = (mask >> (n - 1 - p)) & 1;
      if (gap_bits_ok(bits, d, nullptr))
        return GapString{bits_to_gap(bits), d, GapMode::Mismatch};
    }
  } else if (strategy == GapStrategy::RandomRetry) {
    SplitMix rng(seed);
    for (; examined < budget; ++examined) {
      uint64_t word = 0;
      for (int p = 0; p < n; ++p) {
        if (p % 64 == 0) word = rng.next();
        bits[p] = (word >> (p % 64)) & 1;
      }
      if (gap_bits_ok(bits, d, nullptr))
        return GapString{bits_to_gap(bits), d, GapMode::Mismatch};
    }
  } else {
    const int t = std::max(2, 2 * ceil_log2(static_cast<uint64_t>(d)));
    for (; examined < budget; ++examined) {
      bits = kwise_bits_raw(seed + examined, t, static_cast<size_t>(n));
      if (gap_bits_ok(bits, d, nullptr))
        return GapString{bits_to_gap(bits), d, GapMode::Mismatch};
    }
  }
  throw GapNotFound("no verified gap among the first " + std::to_string(examined) +
                    " candidates (d = " + std::to_string(d) + ")");
}

uint64_t default_gap_budget(GapStrategy strategy, int d) {
  check_gap_d(d);
  if (strategy == GapStrategy::Exhaustive) {
    const uint64_t cap = uint64_t{1} << 26;
    if (2 * d >= 62) return cap;
    return std::min(cap, uint64_t{1} << (2 * d));
  }
  return uint64_t{1} << 20;
}

GapString gap_from_symbols(SymbolString s, int d, GapMode mode) {
  check_gap_d(d);
  check_gap_shape(s, d);
  if (mode == GapMode::Edit) {
    if (s != edit_gap(d).symbols)
      throw ParamError("edit-mode gap must be $^d #^d");
  } else if (auto bad = gap_counterexample(s, d)) {
    throw ParamError("gap fails the mismatch property at prefix length " +
                     std::to_string(*bad));
  }
  return GapString{std::move(s), d, mode};
}

GapString gap_unchecked(SymbolString s, int d, GapMode mode) {
  check_gap_d(d);
  check_gap_shape(s, d);
  return GapString{std::move(s), d, mode};
}

}  // namespace hardstrings
