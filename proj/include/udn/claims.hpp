// SPDX-License-Identifier: Apache-2.0
//
// Executable regression targets: the quantitative claims the engine is
// expected to reproduce, each encoded as an independent pass/fail check
// over freshly computed sweeps.  Kept separate so the engine itself
// stays claim-agnostic.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace udn {

struct ClaimResult {
  std::string id;
  bool pass = false;
  std::string detail;    // measured values
  std::string expected;  // target band
};

struct ClaimOptions {
  long mc_drops = 200000;
  int threads = 0;  // 0: hardware concurrency
  std::uint64_t seed = 1;
};

const std::vector<std::string>& claim_ids();
ClaimResult run_claim(const std::string& id, const ClaimOptions& opts);
std::vector<ClaimResult> run_all_claims(const ClaimOptions& opts);
std::string claims_json_report(const std::vector<ClaimResult>& results);

}  // namespace udn
