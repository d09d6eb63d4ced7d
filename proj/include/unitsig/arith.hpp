#pragma once

#include <cstdint>
#include <vector>

#include "unitsig/integer.hpp"

namespace unitsig {

/* Prime factorization with ascending primes and positive exponents. */
struct Factorization {
  std::vector<std::pair<Int, unsigned>> primes;

  bool contains(const Int& p) const;
  unsigned exponent(const Int& p) const;
  Int value() const;
  /* Product of primes with odd exponent. */
  Int radical_of_odd_part() const;
};

/* n = squarefree * cofactor^2 with squarefree free of square factors.
 * The sign of n goes to the squarefree part. */
struct SquarefreeDecomp {
  Int squarefree;
  Int cofactor;
};

/* Deterministic primality for |n| < 3.3e24 (fixed Miller-Rabin base set);
 * larger inputs fall back to GMP's composite test with many rounds. */
bool is_prime(const Int& n);

/* Factor n >= 1 by trial division, then Brent's rho on the cofactors.
 * Throws std::runtime_error if the iteration budget runs out before the
 * remaining cofactor splits (only reachable far above word-sized inputs). */
Factorization factorize(const Int& n);

SquarefreeDecomp squarefree_part(const Int& n);

/* Jacobi symbol (a/n) for odd positive n. */
int jacobi(const Int& a, const Int& n);

/* Symbol (p/q) for distinct primes. For q = 2 the reflected convention
 * (p/2) := (2/p) applies, so the symbol is symmetric whenever 2 is involved. */
int residue_symbol(const Int& p, const Int& q);

/* Primes up to and including bound, ascending. */
std::vector<std::uint64_t> prime_sieve(std::uint64_t bound);

/* Search pattern for tuples of distinct primes: per-slot congruence
 * constraints plus pairwise residue-symbol constraints. */
struct SlotCondition {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1; /* modulus 1 means unconstrained */
};

struct SymbolCondition {
  int i;
  int j;
  int sign; /* residue_symbol(p_i, p_j) must equal sign */
};

struct PrimePattern {
  std::vector<SlotCondition> slots;
  std::vector<SymbolCondition> symbols;
  std::vector<std::uint64_t> exclude; /* primes barred from every slot */
};

/* All tuples of distinct primes <= bound matching the pattern, in
 * lexicographic order, truncated to max_results (0 = unlimited). */
std::vector<std::vector<Int>> primes_matching(const PrimePattern& pattern,
                                              std::uint64_t bound,
                                              std::size_t max_results = 0);

}  // namespace unitsig
