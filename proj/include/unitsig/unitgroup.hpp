#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unitsig/mqfield.hpp"
#include "unitsig/quadfield.hpp"

namespace unitsig {

/* Fundamental unit of the quadratic subfield Q(sqrt(r_S)), with its m-data
 * when the norm is +1 (norm -1 units carry no m). */
struct SubfieldUnitRecord {
  Subset mask = 0;
  Int radicand;
  QuadUnit eps;
  std::optional<MData> m;
};

/* Generators of the unit group modulo {+-1} together with how each one was
 * assembled from the subfield units: provenance[i][S-1] is the exponent of
 * eps_S, a dyadic rational (square-root adjunctions contribute halves). */
struct UnitSystem {
  std::shared_ptr<const MQField> K;
  std::vector<SubfieldUnitRecord> subfield; /* index mask-1, mask order */
  std::vector<MQElement> gens;              /* 2^t - 1 of them */
  std::vector<std::vector<Rat>> provenance;
  std::vector<Signature> gen_sigs;
  unsigned adjunctions = 0;
  /* The product scan provably reaches the full unit group for t <= 3; for
   * larger t the result is only the 2-saturation of the subfield-unit
   * group and ranks derived from it are bounds. */
  bool complete = false;
};

std::vector<SubfieldUnitRecord> subfield_units(
    const std::shared_ptr<const MQField>& K);

/* Whether prod_S eps_S^{n_S} is a square in K, decided purely from the
 * m-values: the product is a square exactly when the squarefree part of
 * prod m_S^{n_S} equals some r_T (including r_0 = 1). Exponents on norm -1
 * units must be even (domain error otherwise). */
bool kubota_square_class(const MQField& K,
                         const std::vector<SubfieldUnitRecord>& records,
                         const std::vector<int>& exponents);

/* Starting from the subfield fundamental units, repeatedly scan all
 * {0,1}-exponent products whose sign data admits a totally positive
 * representative, adjoin square roots, and stop at a fixpoint. Generator
 * count stays 2^t - 1; the replaced generator is the lowest-index one
 * involved in the product (deterministic output). */
UnitSystem saturate(std::shared_ptr<const MQField> K);

struct RankReport {
  unsigned rank = 0;
  unsigned deficiency = 0;
  std::vector<Signature> rows; /* row 0 is the signature of -1 */
  bool exact = false;          /* false when the system may be unsaturated */
};

RankReport signature_rank(const UnitSystem& U);

/* Kuroda-style label for a biquadratic field: family 'b' cases 1-7 when not
 * every subfield unit has norm -1, family 'c' cases 1-2 otherwise. */
struct BiquadClass {
  char family = 'b';
  int number = 0;
  std::string generators;

  std::string label() const {
    return std::string(1, family) + std::to_string(number);
  }
};

BiquadClass classify_biquadratic(const UnitSystem& U);

/* Rank of the signature matrix of {-1} and the subfield units alone (no
 * saturation); always <= t + 1. */
unsigned subfield_signature_rank(const std::shared_ptr<const MQField>& K);
unsigned subfield_signature_rank(const MQField& K,
                                 const std::vector<SubfieldUnitRecord>& recs);

/* Lower bound on the deficiency: the F_2 rank of the m-classes of the given
 * norm-+1 units in the rational square classes modulo the subgroup generated by the r_S. Each
 * such unit is totally positive, and a square subset product would force
 * the corresponding m-product into the r_S classes. */
unsigned tp_independent_lower_bound(const MQField& K,
                                    const std::vector<Int>& m_values);
/* Same bound using the m-values of every norm-+1 subfield unit. */
unsigned tp_independent_lower_bound(const std::shared_ptr<const MQField>& K);

/* Human-readable name of a provenance vector, e.g. "sqrt(e1*e2)" or "e2";
 * subfield units are numbered by basis mask (e1 <-> mask 1). */
std::string provenance_label(const std::vector<Rat>& p);

/* The half-exponent pattern of each generator as a bitmask over subfield
 * indices (bit S-1 set when eps_S appears with half-integral exponent). */
std::vector<std::uint32_t> provenance_half_masks(const UnitSystem& U);

}  // namespace unitsig
