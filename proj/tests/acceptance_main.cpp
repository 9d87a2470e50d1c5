// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: runs regression-target claims and prints one
// pass/fail line per claim.  Invoked by ctest once per claim id.

#include <cstring>
#include <iostream>
#include <string>

#include "udn/claims.hpp"

int main(int argc, char** argv) {
  std::string claim_id;
  udn::ClaimOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--claim" && i + 1 < argc) {
      claim_id = argv[++i];
    } else if (arg == "--mc-drops" && i + 1 < argc) {
      opts.mc_drops = std::stol(argv[++i]);
    } else if (arg == "--threads" && i + 1 < argc) {
      opts.threads = std::stoi(argv[++i]);
    } else if (arg == "--seed" && i + 1 < argc) {
      opts.seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--claim id] [--mc-drops n] "
                   "[--threads n] [--seed s]\n";
      return 2;
    }
  }

  std::vector<udn::ClaimResult> results;
  try {
    if (!claim_id.empty())
      results.push_back(udn::run_claim(claim_id, opts));
    else
      results = udn::run_all_claims(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " — " << r.detail
              << "\n";
    if (!r.pass && !r.expected.empty())
      std::cout << "       expected: " << r.expected << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
