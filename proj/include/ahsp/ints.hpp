#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ahsp {

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

// Division rounding toward negative infinity; b > 0.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b) != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

// Remainder in [0, b); b > 0.
inline i64 mod_floor(i64 a, i64 b) {
  i64 r = a % b;
  if (r < 0) r += b;
  return r;
}

inline i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

inline i64 lcm_i64(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

struct PrimePower {
  i64 prime;
  int exponent;
};

// n = p^e with e >= 1, or throws.
PrimePower prime_power_of(i64 n);

bool is_prime_power(i64 n);

// Prime factorization of n >= 1, primes ascending.
std::vector<PrimePower> factorize(i64 n);

// Sum of prime exponents of n (0 for n = 1).
int exponent_sum(i64 n);

// Smallest c with 2^c >= x, for x > 0.
int ceil_log2(double x);

}  // namespace ahsp
