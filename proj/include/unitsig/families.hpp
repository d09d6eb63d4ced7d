#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unitsig/integer.hpp"

namespace unitsig {

/* Pairwise residue-symbol table for an ordered tuple of primes. Concrete
 * assignments compute every (q_i/q_j) directly; symbolic assignments take
 * the upper triangle (row-major, i < j) and complete the lower one by
 * reciprocity: (q_j/q_i) = -(q_i/q_j) when both primes are 3 mod 4,
 * (q_j/q_i) = (q_i/q_j) otherwise, with (p/2) read as (2/p). */
class ResidueAssignment {
 public:
  static ResidueAssignment from_primes(std::vector<Int> primes);
  static ResidueAssignment from_symbols(unsigned n,
                                        const std::vector<int>& upper,
                                        bool antisymmetric);

  unsigned size() const { return n_; }
  bool concrete() const { return !primes_.empty(); }
  const std::vector<Int>& primes() const { return primes_; }
  int symbol(unsigned i, unsigned j) const; /* (q_i / q_j), i != j, 0-based */
  /* sub-assignment on the given index list, order preserved */
  ResidueAssignment restrict_to(const std::vector<unsigned>& idx) const;

 private:
  unsigned n_ = 0;
  std::vector<Int> primes_;
  std::vector<int> sym_; /* n*n matrix, diagonal 0 */
};

/* Subsets S1 of the prime tuple that survive both norm-constraint families;
 * candidates for the m-invariant of the unit of Q(sqrt(q_1...q_n)).
 * Proper nonempty subsets only: m = 1 and m = d never qualify for a
 * fundamental unit. */
struct MCandidateSet {
  unsigned n = 0;
  std::vector<std::uint32_t> masks; /* bit i = prime i, ascending order */
  std::vector<Int> values;          /* subset products when concrete */
  bool contains(std::uint32_t mask) const;
};

/* n even, all primes 3 mod 4. For each proper nonempty S1 with complement
 * S2 requires prod_{i in S1}(q_i/q_j) = +1 for every j in S2 and
 * prod_{j in S2}(q_j/q_i) = -1 for every i in S1. */
MCandidateSet possible_m(const ResidueAssignment& a);

/* p2, p3 = 1 mod 4 and p1 = 2 or 1 mod 4. Both constraint families demand
 * +1 here since -1 is a square mod every prime involved. An empty result
 * forces the fundamental unit of Q(sqrt(p1 p2 p3)) to have norm -1. */
MCandidateSet possible_m_three_primes(const ResidueAssignment& a);

struct FamilyFact {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct FamilyVerdict {
  std::string family;
  std::vector<Int> params;
  bool in_family = false;
  std::string reject_reason; /* set when the hypotheses fail */
  std::vector<FamilyFact> facts;
  bool pass = false; /* in_family and every fact passes */
};

/* family ids: rank4, rank3-n2plus1, q3mod4-pairs, deficiency3,
 * prime-triquad-min, octuple, qmulti, composite. Recomputes units,
 * saturation and ranks from scratch and compares against the family's
 * predicted system. Unknown id -> invalid_argument. */
FamilyVerdict verify_family(const std::string& family,
                            const std::vector<Int>& params);

/* Does the deficiency-3 construction apply to this 6-prime configuration?
 * Computes the candidate sets for the radicands q1q2q3q4, q1q2q5q6 and
 * q3q4q5q6; applies = all three nonempty and every candidate triple keeps
 * all seven nontrivial products m1^a m2^b m3^c off the square classes
 * {1, d1, d2, d3}. require_unique additionally demands singleton sets. */
bool deficiency3_method_applies(const ResidueAssignment& six,
                                bool require_unique = false);

struct ConfigEnumeration {
  unsigned total = 1u << 15;
  unsigned count_forall = 0;
  unsigned count_unique = 0;
  /* bit k set = k-th symbol (row-major over pairs) equals -1 */
  std::vector<std::uint16_t> forall_configs;
};

/* Scan all 2^15 symbol assignments for 6 primes (3 mod 4) under both
 * interpretations of "the construction applies". */
ConfigEnumeration enumerate_residue_configs();

struct DensityInterval {
  std::uint64_t prime_bound = 0;
  unsigned primes_used = 0;
  double lo = 0.0, hi = 0.0;
  std::string lo_str, hi_str; /* decimal, rounded outward */
};

/* Enclosing interval for C = (18/25) prod_{p = 1 mod 4, p > 5}(1 - 4/p^2):
 * directed-rounded partial product over p <= prime_bound times the tail
 * enclosure [1 - 4/prime_bound, 1]. prime_bound >= 1000. */
DensityInterval density_constant(std::uint64_t prime_bound);

/* Assembly step shared with the parallel sweep kernel: exact partial product
 * (including the 18/25 factor) in, outward-rounded interval out. */
DensityInterval density_interval_from_product(const Rat& partial,
                                              std::uint64_t prime_bound,
                                              unsigned primes_used);

struct CyclotomicBound {
  unsigned t = 0;
  std::vector<Int> primes_3mod4;      /* primes q = 3 mod 4 dividing n */
  std::vector<Int> witness_radicands; /* q1q2, q3q4, ... from the first 2t */
};

/* Lower bound t = floor(#{q = 3 mod 4 : q | n} / 2) on the deficiency of
 * the maximal real subfield of the n-th cyclotomic field, witnessed by the
 * multiquadratic subfield with the listed radicands. */
CyclotomicBound cyclotomic_deficiency_bound(const Int& n);

struct SearchResult {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/* Enumerate verified family members with every parameter below bound, in
 * lexicographic parameter order. Supported: rank4, rank3-n2plus1,
 * q3mod4-pairs (full verification per row) and deficiency3 (residue-symbol
 * predicate per ordered tuple). Other ids -> invalid_argument. */
SearchResult search_family(const std::string& family, std::uint64_t bound);

}  // namespace unitsig
