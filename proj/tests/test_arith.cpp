#include <algorithm>
#include <random>

#include "doctest.h"
#include "unitsig/arith.hpp"

using namespace unitsig;

TEST_CASE("isqrt and is_square") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(1)) == 1);
  CHECK(isqrt(Int(2)) == 1);
  CHECK(isqrt(Int(4)) == 2);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Int n(rng() >> 20);
    Int r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    CHECK(is_square(n * n));
    if (n > 0) CHECK_FALSE(is_square(n * n + 1));
  }
}

TEST_CASE("decimal_digits counts exactly") {
  CHECK(decimal_digits(Int(0)) == 1);
  CHECK(decimal_digits(Int(9)) == 1);
  CHECK(decimal_digits(Int(10)) == 2);
  Int p = pow_int(Int(10), 50);
  CHECK(decimal_digits(p - 1) == 50);
  CHECK(decimal_digits(p) == 51);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Int n = Int(rng()) * Int(rng()) + 1;
    CHECK(decimal_digits(n) == n.get_str().size());
  }
}

TEST_CASE("squarefree_part against trial-division oracle") {
  for (long n = 1; n <= 5000; ++n) {
    Int big_square(1);
    long m = n;
    for (long s = 2; s * s <= m; ++s)
      while (m % (s * s) == 0) {
        m /= s * s;
        big_square *= s;
      }
    auto d = squarefree_part(Int(n));
    CHECK(d.squarefree == m);
    CHECK(d.cofactor == big_square);
    CHECK(d.squarefree * d.cofactor * d.cofactor == n);
  }
  auto neg = squarefree_part(Int(-12));
  CHECK(neg.squarefree == -3);
  CHECK(neg.cofactor == 2);
}

TEST_CASE("jacobi equals the Euler criterion on prime moduli") {
  for (std::uint64_t p : prime_sieve(199)) {
    if (p == 2) continue;
    for (std::uint64_t a = 0; a < p; ++a) {
      Int e;
      mpz_powm_ui(e.get_mpz_t(), Int(a).get_mpz_t(), (p - 1) / 2,
                  Int(p).get_mpz_t());
      int legendre = a % p == 0 ? 0 : (e == 1 ? 1 : -1);
      CHECK(jacobi(Int(a), Int(p)) == legendre);
    }
  }
}

TEST_CASE("jacobi multiplicativity and periodicity") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Int n(2 * (rng() % 100000) + 1);
    Int m(2 * (rng() % 100000) + 1);
    Int a(rng() % 1000000), b(rng() % 1000000);
    CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
    CHECK(jacobi(a, n * m) == jacobi(a, n) * jacobi(a, m));
    CHECK(jacobi(a + n, n) == jacobi(a, n));
  }
}

TEST_CASE("residue_symbol reciprocity and the symbol at 2") {
  /* for odd primes the symbol is the Legendre symbol; at 2 both orders give
     (2/p) so the symbol stays symmetric exactly when p = +-1 mod 8 */
  CHECK(residue_symbol(Int(2), Int(7)) == 1);
  CHECK(residue_symbol(Int(7), Int(2)) == 1);
  CHECK(residue_symbol(Int(2), Int(3)) == -1);
  CHECK(residue_symbol(Int(3), Int(2)) == -1);
  CHECK(residue_symbol(Int(5), Int(13)) == -1);
  CHECK(residue_symbol(Int(13), Int(5)) == -1);
  CHECK(residue_symbol(Int(3), Int(11)) == 1);
  CHECK(residue_symbol(Int(11), Int(3)) == -1);
  auto ps = prime_sieve(150);
  for (std::uint64_t p : ps)
    for (std::uint64_t q : ps) {
      if (p == q || p == 2 || q == 2) continue;
      int lhs = residue_symbol(Int(p), Int(q));
      int rhs = residue_symbol(Int(q), Int(p));
      int sign = (p % 4 == 3 && q % 4 == 3) ? -1 : 1;
      CHECK(lhs == sign * rhs);
    }
}

TEST_CASE("is_prime matches a sieve and known hard cases") {
  auto ps = prime_sieve(20000);
  std::size_t k = 0;
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    bool in_sieve = k < ps.size() && ps[k] == n;
    if (in_sieve) ++k;
    CHECK(is_prime(Int((unsigned long)n)) == in_sieve);
  }
  CHECK(is_prime((Int(1) << 61) - 1));
  CHECK_FALSE(is_prime((Int(1) << 67) - 1));
  CHECK_FALSE(is_prime(Int(561)));          /* Carmichael */
  CHECK_FALSE(is_prime(Int(3215031751ul))); /* strong pseudoprime 2,3,5,7 */
  CHECK_FALSE(is_prime(Int(0)));
  CHECK_FALSE(is_prime(Int(1)));
}

TEST_CASE("factorize round-trips and yields prime factors") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    Int n(static_cast<unsigned long>(1 + rng() % 1000000000000ull));
    auto f = factorize(n);
    CHECK(f.value() == n);
    Int prev(1);
    for (const auto& [p, e] : f.primes) {
      CHECK(is_prime(p));
      CHECK(p > prev);
      CHECK(e >= 1);
      prev = p;
    }
  }
  auto f = factorize(Int(683333)); /* 7 * 31 * 47 * 67 */
  CHECK(f.primes.size() == 4);
  CHECK(f.exponent(Int(31)) == 1);
  CHECK(f.value() == 683333);
  CHECK(factorize(Int(1)).primes.empty());
  CHECK(factorize(Int(6113479)).contains(Int(991)));
  CHECK(factorize(Int(6113479)).contains(Int(199)));
}

TEST_CASE("radical_of_odd_part") {
  auto f = factorize(Int(720)); /* 2^4 * 3^2 * 5 */
  CHECK(f.radical_of_odd_part() == 5);
  f = factorize(Int(23 * 23 * 29));
  CHECK(f.radical_of_odd_part() == 29);
}

TEST_CASE("prime_sieve is inclusive and complete") {
  CHECK(prime_sieve(1).empty());
  CHECK(prime_sieve(2) == std::vector<std::uint64_t>{2});
  auto ps = prime_sieve(13);
  CHECK(ps.back() == 13);
  CHECK(prime_sieve(10000).size() == 1229);
}

TEST_CASE("primes_matching against brute force") {
  /* pairs p1 < 50, p2 < 50, p1 = p2 = 1 mod 4, (p1/p2) = -1 */
  PrimePattern pat;
  pat.slots = {{1, 4}, {1, 4}};
  pat.symbols = {{0, 1, -1}};
  auto got = primes_matching(pat, 50);
  std::vector<std::vector<Int>> expect;
  for (std::uint64_t p1 : prime_sieve(50))
    for (std::uint64_t p2 : prime_sieve(50)) {
      if (p1 % 4 != 1 || p2 % 4 != 1 || p1 == p2) continue;
      if (residue_symbol(Int(p1), Int(p2)) != -1) continue;
      expect.push_back({Int(p1), Int(p2)});
    }
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);

  PrimePattern excl = pat;
  excl.exclude = {5};
  for (const auto& tup : primes_matching(excl, 50))
    for (const Int& p : tup) CHECK(p != 5);

  CHECK(primes_matching(pat, 50, 3).size() == 3);
}

TEST_CASE("valuation and pow_int") {
  CHECK(valuation(Int(48), Int(2)) == 4);
  CHECK(valuation(Int(48), Int(3)) == 1);
  CHECK(valuation(Int(5), Int(7)) == 0);
  CHECK(pow_int(Int(3), 0) == 1);
  CHECK(pow_int(Int(3), 7) == 2187);
}
