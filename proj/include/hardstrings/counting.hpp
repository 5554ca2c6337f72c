#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "hardstrings/errors.hpp"

namespace hardstrings {

// All counting formulas are evaluated exactly; floating point appears only in
// report display.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the combinatorial convention: 0 whenever the
// arguments are out of range (r < 0, r > n, n < 0).
BigInt binomial(int64_t n, int64_t r);

// base^e for e >= 0.
BigInt ipow(const BigInt& base, uint64_t e);

// base^e for any integer e; negative exponents give exact rationals.
// base must be nonzero when e < 0.
Rational rpow(const Rational& base, int64_t e);

// Checks (n/k)^k <= C(n,k) <= (n*e/k)^k with exact arithmetic, using a
// rational lower approximation of e (the inequality has slack >= sqrt(2*pi*k),
// so an 18-digit truncation can never flip it at any feasible scale).
// Requires n > k > 0.  Doubles as a self-test of the big-number layer.
bool binom_bounds_check(uint64_t n, uint64_t k);

}  // namespace hardstrings
