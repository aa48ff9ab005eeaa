// Plain key-value configuration grammar shared by the CLI and any caller
// that keeps configurations in text form:
//
//   N=30 m=3 alpha=2 access=fixed r=5 service=scaled mu=1.0
//
// Tokens are whitespace-separated key=value pairs. Keys: N, m, alpha, k,
// access (fixed|prob), r, p, service (scaled|shifted), mu, delta. The
// service part is optional; mu defaults to 1 and delta to 3 when omitted.
#pragma once

#include <optional>
#include <string>

#include "allocrate/model.hpp"

namespace allocrate {

inline constexpr double kDefaultServiceRate = 1.0;
inline constexpr double kDefaultShift = 3.0;

struct ParsedConfig {
  SystemConfig config;
  AccessModel access;
  std::optional<ServiceModel> service;
};

/// Parses the grammar above; throws std::invalid_argument on syntax errors,
/// unknown keys, or missing required keys. Semantic validity is the caller's
/// concern (see validate()).
ParsedConfig parse_config_text(const std::string& text);

/// Canonical one-line rendering in the same grammar.
std::string config_text(const SystemConfig& config, const AccessModel& access,
                        const std::optional<ServiceModel>& service);

}  // namespace allocrate
