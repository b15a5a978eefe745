#pragma once

#include <string>

#include "mdsgrs/error.hpp"
#include "mdsgrs/field.hpp"

namespace mdsgrs::detail {

inline void require(bool ok, const std::string& condition) {
  if (!ok) throw Error(ErrorKind::HypothesisViolated, "requires " + condition);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::VerificationFailed, what);
}

inline std::string sign_str(int s) { return s == 1 ? "+1" : "-1"; }

/// "eta(3) = -1 in GF(5)" style witness text.
inline std::string eta_text(const Field& f, const std::string& arg, Elem x) {
  return "eta(" + arg + ") = " + (x.is_zero() ? std::string("0") : sign_str(f.eta(x))) + " in " + f.name();
}

/// eta of an integer that is nonzero mod p; zero counts as failing.
inline int eta_int(const Field& f, std::int64_t n) {
  const Elem x = f.from_int(n);
  return x.is_zero() ? 0 : f.eta(x);
}

}  // namespace mdsgrs::detail
