#pragma once

// Dense polynomials over GF(p), constant term first, kept trimmed.

#include <cstdint>
#include <vector>

namespace mdsgrs::detail {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial

Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p);
/// Remainder of a modulo b (b nonzero).
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p);
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p);
Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::uint64_t p);
Poly poly_gcd(Poly a, Poly b, std::uint64_t p);

/// Ben-Or irreducibility test.
bool is_irreducible(const Poly& f, std::uint64_t p);

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Base-p digit packing: index = sum c_i p^i.
Poly poly_from_index(std::uint64_t index, std::uint64_t p);
std::uint64_t index_from_poly(const Poly& f, std::uint64_t p);

}  // namespace mdsgrs::detail
