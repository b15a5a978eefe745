#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mdsgrs/field.hpp"
#include "mdsgrs/grs.hpp"

// Additive constructions: translates of an F_r-subspace V placed at the
// multiples beta_i * zeta of a shift zeta, and the theorems built on them.
namespace mdsgrs {

struct SubspaceLiftSpec {
  std::vector<Elem> base;      // b: distinct elements of GF(r)
  std::uint64_t r = 0;         // subfield order
  std::vector<Elem> subspace;  // all r^e elements of V
  Elem shift;                  // zeta, outside V
};

/// Points beta_i * zeta + v_j in row-major order (i outer). Checks the spec
/// invariants and asserts L_a(beta_k zeta + v) = lift_factor * L_b(beta_k) at
/// every point (VerificationFailed otherwise).
std::vector<Elem> subspace_lift(const Field& f, const SubspaceLiftSpec& spec);

/// (prod_{0 != v in V} v) * (prod_{v in V} (zeta + v))^(t-1).
Elem lift_factor(const Field& f, const SubspaceLiftSpec& spec);

/// The first e vectors of the F_r-basis of F_ambient obtained greedily from
/// powers of the primitive element of F_ambient.
std::vector<Elem> default_subspace_basis(const Field& f, std::uint64_t r, std::uint64_t ambient, std::uint32_t e);
/// span of default_subspace_basis.
std::vector<Elem> default_subspace(const Field& f, std::uint64_t r, std::uint64_t ambient, std::uint32_t e);
/// Smallest-encoding element of F_ambient outside `subspace`.
Elem default_shift(const Field& f, std::span<const Elem> subspace, std::uint64_t ambient);

/// Odd-size lift preserving extended self-duality: requires |b| odd, the
/// extended criterion on b (BaseNotSelfDual) and eta(-1) = +1 or dim V even
/// (ParityCondition). The lifted set is asserted to satisfy the criterion.
std::vector<Elem> lemma8_extended_lift(const Field& f, std::span<const Elem> base, std::uint64_t r,
                                       std::span<const Elem> subspace, Elem shift);

// Point sets of each theorem, with every point inside F_ambient (a subfield of
// f). The coset constructions reuse these with ambient < q. Characters are
// always those of f. Throw HypothesisViolated naming the failed condition.
std::vector<Elem> th1_points(const Field& f, std::uint64_t r, std::uint64_t ambient, std::uint32_t e,
                             std::uint64_t t);
std::vector<Elem> th2_points(const Field& f, std::uint64_t ambient, std::uint32_t e, std::uint64_t t);
std::vector<Elem> th3_points(const Field& f, std::uint64_t ambient, std::uint32_t e, std::uint64_t t);
std::vector<Elem> th4_points(const Field& f, std::uint64_t r, std::uint64_t ambient, std::uint32_t e,
                             std::uint64_t t);

/// GF(r^m) for an odd prime power r.
FieldPtr field_for(std::uint64_t r, std::uint32_t m, std::uint64_t table_limit = Field::kDefaultTableLimit);

/// [2 t r^e, t r^e] over GF(r^m); q = 1 mod 4, t | (r-1)/2, t != (r-1)/2, e < m.
SelfDualCode th1_code(FieldPtr f, std::uint64_t r, std::uint32_t m, std::uint32_t e, std::uint64_t t);
/// [(t+1) p^e] over GF(p^m); t odd, needs eta(i(t+1-i)) = 1 for i <= (t-1)/2.
SelfDualCode th2_code(FieldPtr f, std::uint64_t p, std::uint32_t m, std::uint32_t e, std::uint64_t t);
/// Extended, length (t+1) p^e + 1; t even, needs eta(i(t+1-i)) = 1 for i <= t/2.
SelfDualCode th3_code(FieldPtr f, std::uint64_t p, std::uint32_t m, std::uint32_t e, std::uint64_t t);
/// Extended, length (t+1) r^e + 1; t even, t | r-1, eta(t) = eta(-1) = 1 or (eta(-t) = 1, e even).
SelfDualCode th4_code(FieldPtr f, std::uint64_t r, std::uint32_t m, std::uint32_t e, std::uint64_t t);

}  // namespace mdsgrs
