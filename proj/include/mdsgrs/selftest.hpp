#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mdsgrs/field.hpp"

// Property suites over every field GF(q), q <= max_q, checking the algebraic
// identities the constructions rely on.
namespace mdsgrs {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> witnesses;  // first few failures
};

struct SelftestReport {
  std::uint64_t fields = 0;
  std::vector<SuiteResult> suites;
  bool ok() const;
};

/// Supplies the field of order q. Tests swap in corrupted fields here.
using FieldProvider = std::function<FieldPtr(std::uint64_t q)>;

struct SelftestOptions {
  std::uint64_t max_q = 200;
  std::uint64_t seed = 20240601;
  std::uint32_t random_trials = 20;  // per field, for the randomized suites
  FieldProvider provider;           // default: make_field_of_order
};

SelftestReport run_selftest(const SelftestOptions& options);

/// Suite names in report order.
const std::vector<std::string>& selftest_suites();

}  // namespace mdsgrs
