#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "grig/branch.hpp"
#include "grig/engel.hpp"

namespace grig {

inline constexpr int kCertificateSchema = 1;
inline constexpr const char *kEngineVersion = "grig 1.0.0";

// Every certificate has the shape
//
//   {"schema": 1, "engine_version": ..., "kind": ..., "inputs": {...},
//    "bound": N, "transcript": {...}, "witnesses": [...]}
//
// with words and TWords spelled as CLI literals. Keys are emitted in sorted
// order, so equal certificates serialize to identical bytes.

nlohmann::json to_certificate(const EngelSink &sink);
nlohmann::json to_certificate(const NoSinkUpTo &witness);
nlohmann::json to_certificate(const BoundedLeftRefutation &r);
nlohmann::json to_certificate(const RightRefutation &r);
nlohmann::json k_membership_certificate(const Word &g, const KMembershipResult &result);

struct VerifyReport {
  bool ok = true;
  std::string kind;
  std::vector<std::string> passed;
  std::vector<std::string> failed;

  void check(bool condition, const std::string &what);
};

/// Re-checks a certificate from its own contents, recomputing every claim
/// with the word-problem solver and the tree action. Malformed input gives
/// a failed report, never an exception.
VerifyReport verify_certificate(const nlohmann::json &certificate);

} // namespace grig
