#pragma once

#include <string>

#include "json.hpp"

namespace mdsgrs {

/// Which construction produced a code, with its parameter witness.
struct Provenance {
  std::string theorem;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();

  /// Flat fragment: {"theorem": ..., <params>}.
  nlohmann::ordered_json flat() const {
    nlohmann::ordered_json out;
    out["theorem"] = theorem;
    for (const auto& [key, value] : params.items()) out[key] = value;
    return out;
  }
};

}  // namespace mdsgrs
