#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace gen32 {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// (p, m) with q = p^m, or nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto primes = prime_divisors(q);
  if (primes.size() != 1) return std::nullopt;
  std::uint32_t m = 0;
  while (q > 1) {
    q /= primes.front();
    ++m;
  }
  return std::make_pair(static_cast<std::uint32_t>(primes.front()), m);
}

// Exponent of the prime l in n.
inline std::uint32_t valuation(std::uint64_t n, std::uint64_t l) {
  std::uint32_t v = 0;
  while (n != 0 && n % l == 0) {
    n /= l;
    ++v;
  }
  return v;
}

inline std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace gen32
