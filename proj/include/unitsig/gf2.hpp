#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace unitsig {

/* Rank of a set of F_2 row vectors, each packed into a uint64_t.
 * Rows wider than 64 bits are not needed anywhere in this project. */
inline unsigned gf2_rank(const std::vector<std::uint64_t>& rows) {
  std::array<std::uint64_t, 64> basis{};
  unsigned rank = 0;
  for (std::uint64_t row : rows) {
    for (int b = 63; b >= 0 && row != 0; --b) {
      if (((row >> b) & 1u) == 0) continue;
      if (basis[b]) {
        row ^= basis[b];
      } else {
        basis[b] = row;
        ++rank;
        break;
      }
    }
  }
  return rank;
}

/* Span (all XOR combinations) of the given rows, including 0. */
inline std::vector<std::uint64_t> gf2_span(
    const std::vector<std::uint64_t>& rows) {
  std::vector<std::uint64_t> span{0};
  for (std::uint64_t r : rows) {
    bool inside = false;
    for (std::uint64_t s : span)
      if (s == r) {
        inside = true;
        break;
      }
    if (inside) continue;
    std::size_t old = span.size();
    span.reserve(old * 2);
    for (std::size_t i = 0; i < old; ++i) span.push_back(span[i] ^ r);
  }
  return span;
}

}  // namespace unitsig
