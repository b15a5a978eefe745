#include "mdsgrs/numtheory.hpp"

#include <limits>
#include <numeric>

namespace mdsgrs::nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto factors = prime_factors(n);
  if (factors.size() != 1) return std::nullopt;
  std::uint32_t m = 0;
  while (n > 1) {
    n /= factors[0];
    ++m;
  }
  return std::make_pair(factors[0], m);
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
  constexpr std::uint64_t kMax = std::uint64_t{1} << 63;
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > kMax / base) return std::nullopt;
    acc *= base;
  }
  return acc;
}

std::optional<std::uint32_t> exact_log(std::uint64_t base, std::uint64_t n) {
  if (base < 2 || n == 0) return std::nullopt;
  std::uint32_t k = 0;
  while (n % base == 0) {
    n /= base;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t geometric_sum(std::uint64_t b, std::uint32_t terms) {
  std::uint64_t sum = 0, term = 1;
  for (std::uint32_t i = 0; i < terms; ++i) {
    sum += term;
    term *= b;
  }
  return sum;
}

}  // namespace mdsgrs::nt
