#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mdsgrs/field.hpp"
#include "mdsgrs/grs.hpp"

// Multiplicative constructions: points spread over cosets of subgroups of
// F_Q^*, where F_Q is a subfield of the working field (Q = q for one-step lifts,
// intermediate subfields for iterated ones).
namespace mdsgrs {

/// e1 * e2 = Q - 1 with Q = ambient. theta' = theta^((q-1)/(Q-1)) generates
/// F_Q^*; H1 = <theta'^e1> has order e2, H2 = <theta'^e2> has order e1.
/// f1 is an alias of e2 (the order of H1).
struct CosetSpec {
  std::uint64_t ambient = 0;
  std::uint64_t e1 = 0;
  std::uint64_t e2 = 0;
  std::uint64_t f1() const { return e2; }
};

CosetSpec make_coset_spec(const Field& f, std::uint64_t ambient, std::uint64_t e1);

/// theta' of the spec.
Elem coset_generator(const Field& f, const CosetSpec& cs);
/// v(alpha) = min{x : alpha = theta'^(x e1)}; InvalidArgument if alpha is not in H1.
std::uint64_t coset_index(const Field& f, const CosetSpec& cs, Elem alpha);

/// S = union of theta'^(v(alpha_i)) H2, row-major (base point outer, u inner,
/// point theta'^(v + e2 u)). Asserts pointwise
/// L_S(beta) = e1 theta'^(v(alpha_k)(e1-1)) theta'^(-e2 u) L_a(alpha_k).
std::vector<Elem> coset_lift_points(const Field& f, const CosetSpec& cs, std::span<const Elem> base);

/// Even-size base satisfying the GRS self-dual criterion, e1 odd (E1NotOdd).
/// Returns the lifted points; the criterion on them is asserted.
std::vector<Elem> lemma9_lift_points(const Field& f, const CosetSpec& cs, std::span<const Elem> base);
/// Odd-size base satisfying the extended criterion, e1 odd, eta(e1) = +1
/// (CharacterCondition).
std::vector<Elem> lemma10_lift_points(const Field& f, const CosetSpec& cs, std::span<const Elem> base);

/// Code wrappers over the whole field (ambient = q).
SelfDualCode lemma9_lift(FieldPtr f, std::uint64_t e1, std::vector<Elem> base);
SelfDualCode lemma10_lift(FieldPtr f, std::uint64_t e1, std::vector<Elem> base);

enum class CosetVariant { th8, th9, th10, th11 };
std::string_view to_string(CosetVariant v);
/// Extended variants (th10, th11) produce odd point counts plus infinity.
bool is_extended(CosetVariant v);

/// Base point set inside GF(r^s) for a variant, before shifting away from 0:
/// th8: the even-t roots construction with t/2, th9: {0} u mu_t lifted,
/// th10: mu_t lifted, th11: the {0} u mu_t extended lift.
std::vector<Elem> coset_base_points(const Field& f, CosetVariant variant, std::uint64_t r, std::uint32_t s,
                                    std::uint32_t e, std::uint64_t t);

/// Lifts through GF(r^s) < GF(r^(s m1)) < ... < GF(r^(s m1...ml)) = GF(q).
/// All m_i odd. The base is translated by the smallest a in GF(r^s) making all
/// points nonzero (skipped when every m_i is 1). Provenance th8..th11 for a
/// single factor, cor1..cor4 for several.
SelfDualCode iterated_lift(FieldPtr f, CosetVariant variant, std::uint64_t r, std::uint32_t s,
                           std::span<const std::uint32_t> ms, std::uint32_t e, std::uint64_t t);

SelfDualCode th8_code(FieldPtr f, std::uint64_t r, std::uint32_t s, std::uint32_t m, std::uint32_t e, std::uint64_t t);
SelfDualCode th9_code(FieldPtr f, std::uint64_t r, std::uint32_t s, std::uint32_t m, std::uint32_t e, std::uint64_t t);
SelfDualCode th10_code(FieldPtr f, std::uint64_t r, std::uint32_t s, std::uint32_t m, std::uint32_t e,
                       std::uint64_t t);
SelfDualCode th11_code(FieldPtr f, std::uint64_t r, std::uint32_t s, std::uint32_t m, std::uint32_t e,
                       std::uint64_t t);

/// q = r^2, q - 1 = e1 f1 = e2 f2. H = <theta^e1> (order f1), M = <theta^e2>
/// (order f2). Cosets beta^i H, beta = theta^e2, are distinct iff the indices
/// are distinct mod D = f2 / gcd(f2, f1).
struct TwoDecomposition {
  std::uint64_t r = 0;
  std::uint64_t e1 = 0, f1 = 0;
  std::uint64_t e2 = 0, f2 = 0;
  std::uint64_t s = 0;
  std::uint64_t D = 0;
};

TwoDecomposition make_two_decomposition(const Field& f, std::uint64_t e1, std::uint64_t e2, std::uint64_t s);

/// x in H iff x^f1 = 1.
bool in_subgroup(const Field& f, const TwoDecomposition& td, Elem x);

/// Default indices 0..t-1 (TooManyCosets when t > D); cosets asserted distinct
/// by pairwise membership tests.
std::vector<std::uint64_t> distinct_coset_indices(const Field& f, const TwoDecomposition& td, std::uint64_t t);

/// Union of beta^i H over the indices, row-major (index outer, j inner,
/// point beta^i theta^(e1 j)).
std::vector<Elem> coset_union(const Field& f, const TwoDecomposition& td, std::span<const std::uint64_t> indices);

enum class Th12Variant { tf, tf_plus_2 };
std::string_view to_string(Th12Variant v);

/// Lengths tf or tf+2 over GF(r^2) with q - 1 = e f, s | f, s | r-1.
SelfDualCode th12_code(FieldPtr f, std::uint64_t r, std::uint64_t e, std::uint64_t fo, std::uint64_t s,
                       std::uint64_t t, Th12Variant variant);
/// Length tf+1 (extended) over GF(r^2) with q - 1 = e f, s | f, s | r+1, tf odd.
SelfDualCode th13_code(FieldPtr f, std::uint64_t r, std::uint64_t e, std::uint64_t fo, std::uint64_t s,
                       std::uint64_t t);

}  // namespace mdsgrs
