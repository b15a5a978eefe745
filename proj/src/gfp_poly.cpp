#include "gfp_poly.hpp"

#include <algorithm>
#include <utility>

namespace mdsgrs::detail {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  trim(out);
  return out;
}

Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const int db = degree(b);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (degree(a) >= db) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
  return poly_mod(poly_mul(a, b, p), mod, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::uint64_t p) {
  Poly result{1};
  result = poly_mod(result, mod, p);
  base = poly_mod(std::move(base), mod, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const int m = degree(f);
  if (m < 1) return false;
  if (m == 1) return true;
  const Poly x{0, 1};
  Poly h = x;
  for (int i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    if (degree(poly_gcd(f, poly_sub(h, x, p), p)) > 0) return false;
  }
  return true;
}

Poly poly_from_index(std::uint64_t index, std::uint64_t p) {
  Poly out;
  while (index > 0) {
    out.push_back(index % p);
    index /= p;
  }
  return out;
}

std::uint64_t index_from_poly(const Poly& f, std::uint64_t p) {
  std::uint64_t index = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) index = index * p + *it;
  return index;
}

}  // namespace mdsgrs::detail
