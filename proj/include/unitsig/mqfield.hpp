#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unitsig/integer.hpp"
#include "unitsig/quadfield.hpp"

namespace unitsig {

/* Subset of generator indices as a bitmask: bit i-1 stands for sqrt(d_i).
 * The same masks index the real embeddings: embedding g sends sqrt(d_i) to
 * -sqrt(d_i) exactly when bit i-1 of g is set, so g = 0 is the identity. */
using Subset = std::uint32_t;

/* Signs over all 2^t embeddings: bit g is set when the value is negative at
 * embedding g. */
using Signature = std::uint64_t;

/* Q(sqrt(d_1), ..., sqrt(d_t)) presented by squarefree radicands d_i > 1
 * that are multiplicatively independent modulo squares. The Q-basis is
 * { sqrt(r_S) : S subset }, where r_S is the squarefree part of
 * prod_{i in S} d_i. */
struct MQField {
  unsigned t = 0;
  std::vector<Int> radicands;
  std::vector<Int> basis_radicand; /* r_S, indexed by mask */
  std::vector<Int> basis_cofactor; /* c_S with prod_{i in S} d_i = c_S^2 r_S */
  /* gamma[S][T] = sqrt(r_S r_T / r_{S xor T}), an integer; it realizes
   * sqrt(r_S) * sqrt(r_T) = gamma[S][T] * sqrt(r_{S xor T}). */
  std::vector<std::vector<Int>> gamma;

  unsigned n() const { return 1u << t; }
};

/* Validates the presentation. Throws std::invalid_argument when a radicand
 * is not squarefree or > 1, or when the r_S collide (degenerate
 * presentation); the message names a subset whose product is a square. */
std::shared_ptr<const MQField> make_mq_field(const std::vector<Int>& radicands);

struct MQElement {
  std::shared_ptr<const MQField> K;
  std::vector<Rat> a; /* coordinate of sqrt(r_S) at index S */

  bool is_zero() const;
  bool is_rational() const;
  std::string to_string() const;

  MQElement operator-() const;
  MQElement& operator+=(const MQElement& o);
  MQElement& operator-=(const MQElement& o);
};

MQElement mq_zero(std::shared_ptr<const MQField> K);
MQElement mq_rational(std::shared_ptr<const MQField> K, const Rat& c);
/* The basis element sqrt(r_S). */
MQElement mq_sqrt_basis(std::shared_ptr<const MQField> K, Subset S);

MQElement operator+(const MQElement& x, const MQElement& y);
MQElement operator-(const MQElement& x, const MQElement& y);
MQElement operator*(const MQElement& x, const MQElement& y);
MQElement operator*(const MQElement& x, const Rat& c);
MQElement operator/(const MQElement& x, const Rat& c);
bool operator==(const MQElement& x, const MQElement& y);
bool operator!=(const MQElement& x, const MQElement& y);

/* Product of x over all nontrivial embeddings divided by the rational norm;
 * throws std::domain_error on zero input. */
MQElement inv(const MQElement& x);

/* Norm to Q: the product of g(x) over all 2^t embeddings. */
Rat field_norm(const MQElement& x);

MQElement apply_galois(const MQElement& x, Subset g);

/* Exact sign of the real number g(x), decided by outward-rounded interval
 * evaluation with doubling precision. Throws std::domain_error on x = 0 and
 * std::runtime_error if the precision cap is hit (raise it via
 * set_sign_precision_cap). */
int sign_at(const MQElement& x, Subset g);
Signature signature(const MQElement& x);

unsigned long sign_precision_cap();
void set_sign_precision_cap(unsigned long bits);

struct QuadraticSubfield {
  Subset mask;
  Int radicand; /* r_mask */
};

/* The 2^t - 1 quadratic subfields Q(sqrt(r_S)), in mask order. */
std::vector<QuadraticSubfield> quadratic_subfields(const MQField& K);

/* x + y * sqrt(r_S) as an element of K. */
MQElement embed_quadratic(std::shared_ptr<const MQField> K, Subset S,
                          const Rat& x, const Rat& y);
/* Embeds a unit of Q(sqrt(r_S)); the unit's radicand must equal r_S. */
MQElement embed_unit(std::shared_ptr<const MQField> K, Subset S,
                     const QuadUnit& u);

/* Square root in K if one exists, found by descending the quadratic tower
 * K_j = K_{j-1}(sqrt(d_j)); any returned root squares exactly to u and is
 * positive at the identity embedding (u = 0 gives 0). */
std::optional<MQElement> is_square(const MQElement& u);

}  // namespace unitsig
