#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdsgrs/field.hpp"
#include "mdsgrs/grs.hpp"
#include "mdsgrs/provenance.hpp"

namespace mdsgrs {

/// Greedy point set with all pairwise differences nonzero squares. Starts at
/// (0, 1) and appends the smallest encoding that keeps the property; none when
/// the candidates run out before n points.
std::optional<std::vector<Elem>> square_clique_greedy(const Field& f, std::size_t n);

/// (t + sqrt(t^2 + (n-1) 2^(n-2)))^2 with t = (n-3) 2^(n-3) + 1/2. Greedy
/// success is guaranteed for q strictly above it (q = 1 mod 4).
double large_q_bound(std::uint32_t n);

/// q/2^(n-1) - ((n-3)/2 + 1/2^(n-1)) sqrt(q) - (n-1)/2: lower bound on the
/// number of extensions of an (n-1)-clique.
double clique_count_lower_bound(double q, std::uint32_t n);

/// [n, n/2] code on the greedy clique. Requires q = 1 mod 4 and, unless
/// permissive, q > large_q_bound(n). GreedyFailed when the greedy stops early.
SelfDualCode th_large_q_code(FieldPtr f, std::uint32_t n, bool permissive = false);

enum class CatalogStatus { constructed, nonexistent, unknown };
std::string_view to_string(CatalogStatus s);

struct CatalogEntry {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  CatalogStatus status = CatalogStatus::unknown;
  std::vector<Provenance> provenance;        // every verified hit, theorem order
  std::optional<SelfDualCode> certificate;   // code of the first hit
  std::vector<std::string> skipped;          // candidates beyond the size limits
};

struct CatalogOptions {
  std::uint64_t table_limit = Field::kDefaultTableLimit;
  /// Stop at the first verified hit per length instead of recording all.
  bool first_hit_only = false;
};

/// One entry per even n in [2, n_max], ordered by n. Lengths with q = 3 mod 4
/// and n = 2 mod 4 are nonexistent; a construction hitting one is reported as
/// VerificationFailed.
std::vector<CatalogEntry> catalog(std::uint64_t q, std::uint64_t n_max, const CatalogOptions& options = {});

/// Theorem ids in catalog order.
const std::vector<std::string>& theorem_order();

}  // namespace mdsgrs
