#include "ahsp/ints.hpp"

#include <cmath>

namespace ahsp {

std::vector<PrimePower> factorize(i64 n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

PrimePower prime_power_of(i64 n) {
  if (n < 2) throw std::invalid_argument("prime_power_of: n must be >= 2");
  auto f = factorize(n);
  if (f.size() != 1)
    throw std::invalid_argument("modulus " + std::to_string(n) +
                                " is not a prime power");
  return f[0];
}

bool is_prime_power(i64 n) {
  if (n < 2) return false;
  return factorize(n).size() == 1;
}

int exponent_sum(i64 n) {
  int s = 0;
  for (const auto& pp : factorize(n)) s += pp.exponent;
  return s;
}

int ceil_log2(double x) {
  if (!(x > 0.0)) throw std::domain_error("ceil_log2: x must be positive");
  int c = static_cast<int>(std::ceil(std::log2(x)));
  while (std::exp2(c) < x) ++c;
  while (std::exp2(c - 1) >= x) --c;
  return c;
}

}  // namespace ahsp
