#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "unitsig/families.hpp"
#include "unitsig/integer.hpp"

namespace unitsig {

/* Batch kernels over independent fields. Each parallel kernel has a serial
 * reference implementation with identical output; rows are written at their
 * input index, so results never depend on the schedule. */

struct NormRow {
  Int d;
  int norm = 0;
};

struct MRow {
  Int d;
  int norm = 0;
  Int m; /* 0 when norm is -1 */
};

struct PairClassRow {
  Int q1, q2;
  int case_number = 0; /* 1: both 3 mod 8, 2: both 7 mod 8, 3: mixed */
  unsigned rank = 0;
  unsigned deficiency = 0;
  bool matches_rule = false; /* full verify_family verdict for the pair */
};

struct TriquadRankRow {
  Int p1, p2, p3;
  unsigned rank = 0; /* proven lower bound; the exact rank when exact */
  bool exact = false;
};

namespace serial {

std::vector<NormRow> unit_norms(const std::vector<Int>& ds);
std::vector<MRow> m_values(const std::vector<Int>& ds);
std::vector<PairClassRow> classify_pairs(
    const std::vector<std::pair<Int, Int>>& pairs);
std::vector<TriquadRankRow> triquad_ranks(
    const std::vector<std::array<Int, 3>>& triples);
ConfigEnumeration residue_configs();
DensityInterval density(std::uint64_t prime_bound);

}  // namespace serial

namespace parallel {

/* threads <= 0 keeps the OpenMP default team size */
std::vector<NormRow> unit_norms(const std::vector<Int>& ds, int threads = 0);
std::vector<MRow> m_values(const std::vector<Int>& ds, int threads = 0);
std::vector<PairClassRow> classify_pairs(
    const std::vector<std::pair<Int, Int>>& pairs, int threads = 0);
std::vector<TriquadRankRow> triquad_ranks(
    const std::vector<std::array<Int, 3>>& triples, int threads = 0);
ConfigEnumeration residue_configs(int threads = 0);
DensityInterval density(std::uint64_t prime_bound, int threads = 0);

}  // namespace parallel

}  // namespace unitsig
