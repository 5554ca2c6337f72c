#include "hardstrings/stoppers.hpp"

#include <bit>

namespace hardstrings {

namespace {

bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(size_t n) { return std::countr_zero(n); }

void require_binary(const SymbolString& x) {
  if (!x.all_binary()) throw NonBinarySymbol("input must be over {0,1}");
}

// Appends tau(x[lo, lo+len)) to out; len is a power of two.
void transform_range(const SymbolString& x, size_t lo, size_t len, SymbolString& out) {
  if (len == 1) {
    out.push_back(x[lo]);
    return;
  }
  const size_t half = len / 2;
  const int q = log2_exact(len);
  transform_range(x, lo, half, out);
  out.append(stopper(q));
  transform_range(x, lo + half, half, out);
}

}  // namespace

SymbolString stopper(int level) {
  if (level < 1) throw InvalidLevel("stopper level must be >= 1");
  if (level > 56) throw TooLarge("stopper level too large to materialize");
  const size_t run = size_t{6} << level;
  SymbolString out;
  Symbol c = Symbol::stopper(level);
  for (size_t i = 0; i < run; ++i) out.push_back(c);
  return out;
}

SymbolString pad_to_power_of_two(const SymbolString& x) {
  if (x.empty()) throw EmptyInput("cannot pad an empty string");
  require_binary(x);
  size_t target = std::bit_ceil(x.size());
  SymbolString out = x;
  while (out.size() < target) out.push_back(Symbol::zero());
  return out;
}

size_t transform_length(size_t d) {
  if (!is_power_of_two(d)) throw NotPowerOfTwo("length must be a power of two");
  return d * (1 + 6 * static_cast<size_t>(log2_exact(d)));
}

SymbolString stoppers_transform(const SymbolString& x) {
  if (x.empty()) throw EmptyInput("cannot transform an empty string");
  if (!is_power_of_two(x.size())) throw NotPowerOfTwo("input length must be a power of two");
  require_binary(x);
  SymbolString out;
  transform_range(x, 0, x.size(), out);
  return out;
}

std::vector<SymbolString> transform_set(const std::vector<SymbolString>& xs) {
  if (xs.empty()) return {};
  const size_t len = xs[0].size();
  for (const auto& x : xs) {
    if (x.size() != len) throw MixedLengths("all strings must share one length");
    require_binary(x);
  }
  std::vector<SymbolString> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(stoppers_transform(pad_to_power_of_two(x)));
  return out;
}

}  // namespace hardstrings
