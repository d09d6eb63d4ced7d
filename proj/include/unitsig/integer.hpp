#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace unitsig {

using Int = mpz_class;
using Rat = mpq_class;

/* Floor square root; the argument must be nonnegative. */
inline Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/* Exact square root, or nullopt if n is not a perfect square. */
inline std::optional<Int> sqrt_exact(const Int& n) {
  if (sgn(n) < 0) return std::nullopt;
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return r;
}

/* Exact square root of a rational (canonical form has coprime num/den). */
inline std::optional<Rat> sqrt_exact(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  auto num = sqrt_exact(Int(q.get_num()));
  if (!num) return std::nullopt;
  auto den = sqrt_exact(Int(q.get_den()));
  if (!den) return std::nullopt;
  return Rat(*num, *den);
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/* Exact count of decimal digits of |n|, with digits(0) = 1. */
inline std::size_t decimal_digits(const Int& n) {
  if (n == 0) return 1;
  std::size_t s = mpz_sizeinbase(n.get_mpz_t(), 10);
  /* sizeinbase may report one high; correct by comparing with 10^(s-1) */
  if (s > 1) {
    Int p = pow_int(Int(10), s - 1);
    Int a = abs(n);
    if (a < p) --s;
  }
  return s;
}

/* p-adic valuation of n (n != 0), and the cofactor n / p^v. */
inline unsigned long valuation(Int n, const Int& p, Int* cofactor = nullptr) {
  if (n == 0) throw std::domain_error("valuation: zero argument");
  if (p < 2) throw std::domain_error("valuation: modulus below 2");
  unsigned long v = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++v;
  }
  if (cofactor) *cofactor = n;
  return v;
}

}  // namespace unitsig
