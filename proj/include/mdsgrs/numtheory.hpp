#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Small integer helpers used for parameter sweeps and subgroup bookkeeping.
namespace mdsgrs::nt {

bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// (p, m) with n = p^m, p prime; nullopt otherwise.
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t n);

/// base^exp, or nullopt on overflow past 2^63.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp);

/// Integer logarithm: exp with base^exp == n, or nullopt.
std::optional<std::uint32_t> exact_log(std::uint64_t base, std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

inline bool divides(std::uint64_t d, std::uint64_t n) { return d != 0 && n % d == 0; }

/// 1 + b + b^2 + ... + b^(terms-1)
std::uint64_t geometric_sum(std::uint64_t b, std::uint32_t terms);

}  // namespace mdsgrs::nt
