#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitsig/arith.hpp"
#include "unitsig/integer.hpp"

namespace unitsig {

/* Real quadratic field Q(sqrt(d)), d squarefree > 1.
 * disc = d when d = 1 mod 4, else 4d. */
struct QuadField {
  Int d;
  Int disc;
};

QuadField make_quad_field(const Int& d);

/* Unit x + y*sqrt(d) of the maximal order. x, y are half-integers when
 * d = 1 mod 4 (with 2x = 2y mod 2), plain integers otherwise. */
struct QuadUnit {
  Int d;
  Rat x;
  Rat y;
  int norm;

  /* decimal digits of the integer part (the unit as a real number > 1) */
  std::size_t decimal_digits_of_floor() const;
  std::string to_string() const;
};

/* Fundamental unit eps > 1 of the maximal order of Q(sqrt(d)), computed by
 * the continued-fraction expansion of (b + sqrt(disc))/2 with exact integer
 * state. Norm read off the period parity, then verified exactly. */
QuadUnit fundamental_unit(const Int& d);

/* Data attached to a norm-+1 unit eps > 1: the squarefree m | disc with
 * m*eps = (A - B*sqrt(d))^2, normalized A > 0 (and B < 0 for fundamental
 * units). Equivalently sqrt(eps) = (A - B*sqrt(d))/sqrt(m). */
struct MData {
  Int m;
  Rat A;
  Rat B;
};

/* m as the product of primes p | disc at which Norm(eps+1) has odd valuation;
 * the cofactor Norm(eps+1)/m is verified to be a perfect square. Fundamental
 * mode additionally enforces m not in {1, d}. Norm -1 input is a domain
 * error. */
MData m_of_unit(const QuadUnit& eps, bool fundamental = true);

/* Same data as m_of_unit plus the round-trip check
 * ((A - B*sqrt(d))/sqrt(m))^2 = eps. */
MData sqrt_unit_presentation(const QuadUnit& eps, bool fundamental = true);

/* Congruence/residue criteria that force Norm(eps) = -1. Returns the name of
 * the first criterion that applies, or nullopt when none does (norm then
 * unknown without computing the unit). */
std::optional<std::string> predict_norm_sign(const Factorization& d_factors);
std::optional<std::string> predict_norm_sign(const Int& d);

/* Which product of ramified prime classes is trivial in the strict class
 * group, and the norm/omega trichotomy for the ordinary class group. */
struct GenusRelationReport {
  Int d;
  QuadUnit eps;
  std::optional<Int> m;            /* present iff norm +1 */
  std::vector<Int> relation_primes; /* class product over these is trivial */
  int ordinary_case;               /* 1: norm +1, some q = 3 mod 4 divides d;
                                      2: norm +1, omega with norm -1 exists;
                                      3: norm -1 */
};

GenusRelationReport genus_relation_report(const Int& d);

}  // namespace unitsig
