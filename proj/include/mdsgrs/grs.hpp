#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdsgrs/field.hpp"
#include "mdsgrs/linalg.hpp"
#include "mdsgrs/provenance.hpp"

namespace mdsgrs {

/// Evaluation data (a, v, infinity?) of a GRS or extended GRS code.
struct EvalSet {
  FieldPtr field;
  std::vector<Elem> points;       // a: distinct
  std::vector<Elem> multipliers;  // v: nonzero, empty while unset
  bool extended = false;

  std::size_t size() const { return points.size(); }
  std::size_t length() const { return points.size() + (extended ? 1 : 0); }
  bool has_multipliers() const { return !multipliers.empty(); }
};

/// Longest evaluation set the constructions will build and certify. Beyond it
/// the quadratic Lagrange products become impractical (EnumerationTooLarge).
inline constexpr std::size_t kMaxCodeLength = std::size_t{1} << 15;

/// Validates distinctness (DuplicatePoints), membership, at most q points and
/// the length cap.
EvalSet make_eval_set(FieldPtr field, std::vector<Elem> points, bool extended = false);

struct SelfDualCode {
  EvalSet eval;
  std::size_t k = 0;
  Provenance provenance;

  std::size_t length() const { return eval.length(); }
  const Field& field() const { return *eval.field; }
  GeneratorMatrix generator() const;
};

/// L_a(a_i) = prod_{j != i} (a_i - a_j). A single point gives the empty product 1.
std::vector<Elem> lagrange_l(const Field& f, std::span<const Elem> points);

/// f_S(x) = prod_{s in S} (x - s).
Elem vanishing_eval(const Field& f, std::span<const Elem> set, Elem x);

struct Lemma1Multipliers {
  Elem lambda;
  std::vector<Elem> v;
};

/// Self-dual multipliers for GRS_{n/2}(a, v): requires eta(L_a(a_i)) constant;
/// lambda = 1 (constant +1) or theta (constant -1), v_i = sqrt((lambda L_a(a_i))^-1).
/// Throws OddLength when n is odd.
std::optional<Lemma1Multipliers> lemma1_multipliers(const Field& f, std::span<const Elem> points);

/// Self-dual multipliers for the extended code GRS_{(n+1)/2}(a, v, inf): requires
/// eta(-L_a(a_i)) = +1 for all i, v_i = sqrt((-L_a(a_i))^-1). Throws EvenLength.
std::optional<std::vector<Elem>> lemma2_multipliers(const Field& f, std::span<const Elem> points);

/// Rows i < k are (v_1 a_1^i, ..., v_n a_n^i); extended codes get a trailing
/// column that is 1 in row k-1 and 0 elsewhere.
GeneratorMatrix generator_matrix(const EvalSet& es, std::size_t k);

/// G G^T = 0 and rank k, for a k x 2k matrix. Throws ShapeMismatch otherwise.
bool check_self_dual(const GeneratorMatrix& g);

struct VerifyLimits {
  std::uint64_t enumeration_limit = 10'000'000;  // max q^k for exhaustive distance
  std::uint64_t minor_limit = 1'000'000;         // max C(n, k) for the full minor check
  std::size_t sample_count = 1000;
  std::uint64_t seed = 0x5eed5eedULL;
};

/// Exact minimum weight by enumerating the message space. Throws EnumerationTooLarge.
std::size_t min_distance(const GeneratorMatrix& g, std::uint64_t enumeration_limit = 10'000'000);

enum class MdsMode { exhaustive, minors, sampled };

std::string_view to_string(MdsMode mode);
std::optional<MdsMode> parse_mds_mode(std::string_view s);

/// exhaustive: d == n - k + 1. minors: every k x k column minor is nonzero.
/// sampled: sample_count random k-column subsets are all nonsingular; this is
/// a probabilistic check only. Throws EnumerationTooLarge when infeasible.
bool check_mds(const GeneratorMatrix& g, MdsMode mode, const VerifyLimits& limits = {});

/// Most thorough feasible mode under the limits.
MdsMode auto_mds_mode(const GeneratorMatrix& g, const VerifyLimits& limits = {});

/// G G^T for the GRS generator of `es` at dimension k, from the power sums
/// sum_j v_j^2 a_j^d (entry (i,l) only depends on i+l). O(nk) instead of O(nk^2).
GeneratorMatrix structured_gram(const EvalSet& es, std::size_t k);

/// Certify at k = length/2: nonzero multipliers, structured_gram = 0 (which,
/// with distinct points, also gives rank k). VerificationFailed otherwise.
SelfDualCode certify_code(EvalSet es, Provenance provenance);

/// Code from lemma1_multipliers on the points; BaseNotSelfDual when eta(L_a) is not constant.
SelfDualCode grs_self_dual(FieldPtr field, std::vector<Elem> points, Provenance provenance);
/// Extended code from lemma2_multipliers; BaseNotSelfDual when some eta(-L_a) = -1.
SelfDualCode extended_grs_self_dual(FieldPtr field, std::vector<Elem> points, Provenance provenance);

}  // namespace mdsgrs
