#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unitsig {

/* One checked statement with the measured outcome. */
struct Claim {
  std::string id;        /* group number + letter, e.g. "7b" */
  std::string statement; /* what was checked */
  std::string detail;    /* measured values, empty when the statement says it all */
  bool pass = false;
};

/* A numbered group of claims; the bundled verification suite runs twelve. */
struct ClaimGroup {
  int number = 0;
  std::string title;
  std::vector<Claim> claims;
  bool pass = true;
};

struct VerifyOptions {
  int threads = 0;               /* 0 = library default team size */
  std::uint64_t seed = 20250814; /* sampled property checks only */
  int section = 0;               /* 0 = all groups, else one group number */
};

/* Runs the bundled verification suite (all twelve claim groups, or a single
 * one). Every group is deterministic for a fixed seed. */
std::vector<ClaimGroup> run_verification(const VerifyOptions& opts);

/* True when every group passed. */
bool all_passed(const std::vector<ClaimGroup>& groups);

}  // namespace unitsig
