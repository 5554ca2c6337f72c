#include "hardstrings/counting.hpp"

namespace hardstrings {

BigInt binomial(int64_t n, int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (int64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;  // exact: the running product of i consecutive terms is divisible by i!
  }
  return result;
}

BigInt ipow(const BigInt& base, uint64_t e) {
  BigInt result = 1, b = base;
  while (e) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Rational rpow(const Rational& base, int64_t e) {
  if (e >= 0) {
    Rational result = 1, b = base;
    uint64_t exp = static_cast<uint64_t>(e);
    while (exp) {
      if (exp & 1) result *= b;
      b *= b;
      exp >>= 1;
    }
    return result;
  }
  if (base == 0) throw ParamError("zero base with negative exponent");
  return 1 / rpow(base, -e);
}

bool binom_bounds_check(uint64_t n, uint64_t k) {
  if (!(n > k && k > 0)) throw ParamError("binomial bounds require n > k > 0");
  const BigInt c = binomial(static_cast<int64_t>(n), static_cast<int64_t>(k));
  const BigInt nk = ipow(BigInt(n), k);
  const BigInt kk = ipow(BigInt(k), k);
  // Lower bound: (n/k)^k <= C(n,k)  <=>  n^k <= C(n,k) * k^k.
  if (nk > c * kk) return false;
  // Upper bound: C(n,k) <= (n*e/k)^k  <=>  C(n,k) * k^k * 10^(18k) <= n^k * E18^k
  // where E18 = floor(e * 10^18).
  const BigInt e18("2718281828459045235");
  const BigInt ten18 = ipow(BigInt(10), 18);
  return c * kk * ipow(ten18, k) <= nk * ipow(e18, k);
}

}  // namespace hardstrings
