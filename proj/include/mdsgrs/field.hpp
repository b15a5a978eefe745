#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdsgrs/error.hpp"

namespace mdsgrs {

/// An element of some GF(q) in discrete-log encoding: 0 is the zero element and
/// i >= 1 stands for theta^(i-1), theta being the field's designated primitive
/// element. The encoding is also the wire format.
class Elem {
 public:
  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr auto operator<=>(Elem, Elem) = default;

 private:
  std::uint32_t code_ = 0;
};

/// GF(p^m), p odd, realized through log/exp tables and a Zech logarithm table.
/// Immutable once built; every query is a pure read.
class Field {
 public:
  static constexpr std::uint64_t kDefaultTableLimit = std::uint64_t{1} << 22;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return q_; }

  /// Monic modulus, constant term first (size degree()+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Coefficients of theta in GF(p)[x]/(modulus), constant term first.
  std::vector<std::uint32_t> theta_poly() const { return to_poly(theta()); }

  std::string name() const;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem theta() const { return Elem(2); }
  Elem minus_one() const { return from_log(half_); }

  bool contains(Elem x) const { return x.code() < q_; }
  /// Throws InvalidElement when x is not an encoding of this field.
  void check(Elem x) const;

  /// The image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const;
  /// theta^k for any integer k.
  Elem from_log(std::int64_t k) const {
    const std::int64_t mod = static_cast<std::int64_t>(q_ - 1);
    std::int64_t r = k % mod;
    if (r < 0) r += mod;
    return Elem(static_cast<std::uint32_t>(r) + 1);
  }
  /// Discrete log base theta in [0, q-1); throws ZeroArgument on 0.
  std::uint32_t log(Elem x) const;

  Elem add(Elem a, Elem b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::uint32_t la = a.code() - 1, lb = b.code() - 1;
    if (la > lb) std::swap(la, lb);
    const std::uint32_t z = zech_[lb - la];
    if (z == 0) return Elem(0);
    std::uint32_t r = la + z - 1;
    if (r >= q_ - 1) r -= q_ - 1;
    return Elem(r + 1);
  }
  Elem neg(Elem a) const {
    if (a.is_zero()) return a;
    std::uint32_t r = a.code() - 1 + half_;
    if (r >= q_ - 1) r -= q_ - 1;
    return Elem(r + 1);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return Elem(0);
    std::uint32_t r = (a.code() - 1) + (b.code() - 1);
    if (r >= q_ - 1) r -= q_ - 1;
    return Elem(r + 1);
  }
  /// Throws ZeroArgument on 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^e with 0^0 = 1; negative exponents require a != 0.
  Elem pow(Elem a, std::int64_t e) const;

  /// Quadratic character: +1 on squares, -1 on non-squares. Throws ZeroArgument on 0.
  int eta(Elem x) const;
  bool is_square(Elem x) const { return x.is_zero() || ((x.code() - 1) % 2 == 0); }
  /// Canonical root theta^(log(x)/2); nullopt for non-residues; sqrt(0) = 0.
  std::optional<Elem> sqrt(Elem x) const;

  /// Polynomial representation (length degree(), constant term first).
  std::vector<std::uint32_t> to_poly(Elem x) const;
  Elem from_poly(std::span<const std::uint32_t> coeffs) const;

  /// Orders r = p^d of the subfields, d | m, increasing.
  std::vector<std::uint64_t> subfield_orders() const;
  bool is_subfield_order(std::uint64_t r) const;
  /// {0} followed by theta^(k (q-1)/(r-1)) for k = 0..r-2. Throws NotASubfield.
  std::vector<Elem> subfield_elements(std::uint64_t r) const;
  bool in_subfield(Elem x, std::uint64_t r) const;
  /// All GF(r)-linear combinations of the basis. The coefficient of basis[0]
  /// varies slowest and coefficients run through subfield_elements(r) order.
  std::vector<Elem> span_subspace(std::uint64_t r, std::span<const Elem> basis) const;
  /// Field embedding sub -> this, indexed by the code of the element of `sub`.
  std::vector<Elem> embedding_from(const Field& sub) const;

  /// Same characteristic, degree and modulus.
  bool same_field(const Field& other) const;

  /// Test-only: a copy whose Zech entry at `index` is replaced by `code`.
  std::shared_ptr<const Field> with_corrupted_zech(std::uint32_t index, std::uint32_t code) const;

 private:
  friend std::shared_ptr<const Field> make_field_with_modulus(
      std::uint32_t, std::uint32_t, std::vector<std::uint32_t>, std::uint64_t);

  Field() = default;
  std::uint32_t poly_index_to_code(std::uint32_t index) const;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t half_ = 0;  // (q-1)/2, the log of -1
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;   // poly index of theta^i
  std::vector<std::uint32_t> log_;   // by poly index; entry 0 unused
  std::vector<std::uint32_t> zech_;  // zech_[d] = code of 1 + theta^d
};

using FieldPtr = std::shared_ptr<const Field>;

/// Deterministic GF(p^m): lexicographically smallest monic irreducible modulus
/// (coefficients compared from the constant term up) and the primitive element
/// of smallest polynomial index.
FieldPtr make_field(std::uint32_t p, std::uint32_t m,
                    std::uint64_t table_limit = Field::kDefaultTableLimit);

/// GF(p^m) over a caller-supplied modulus (verified irreducible).
FieldPtr make_field_with_modulus(std::uint32_t p, std::uint32_t m,
                                 std::vector<std::uint32_t> modulus,
                                 std::uint64_t table_limit = Field::kDefaultTableLimit);

/// GF(q) for an odd prime power q.
FieldPtr make_field_of_order(std::uint64_t q,
                             std::uint64_t table_limit = Field::kDefaultTableLimit);

/// Value type bound to its field; mixing fields throws CrossField.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  std::uint32_t encoding() const { return value_.code(); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;

  bool operator==(const FieldElement& o) const;
  std::strong_ordering operator<=>(const FieldElement& o) const;

 private:
  const Field& same(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

}  // namespace mdsgrs
