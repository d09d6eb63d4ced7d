#include "unitsig/arith.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace unitsig {

bool Factorization::contains(const Int& p) const {
  return std::any_of(primes.begin(), primes.end(),
                     [&](const auto& pe) { return pe.first == p; });
}

unsigned Factorization::exponent(const Int& p) const {
  for (const auto& [q, e] : primes)
    if (q == p) return e;
  return 0;
}

Int Factorization::value() const {
  Int v = 1;
  for (const auto& [p, e] : primes) v *= pow_int(p, e);
  return v;
}

Int Factorization::radical_of_odd_part() const {
  Int r = 1;
  for (const auto& [p, e] : primes)
    if (e % 2 == 1) r *= p;
  return r;
}

namespace {

/* Largest n with a correctness proof for the 12-prime Miller-Rabin base set. */
const Int kDeterministicMRBound("3317044064679887385961981");

bool miller_rabin_witness(const Int& n, const Int& a) {
  /* returns true if a proves n composite */
  Int d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const unsigned long small[] = {2,  3,  5,  7,  11, 13,
                                        17, 19, 23, 29, 31, 37};
  for (unsigned long p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < kDeterministicMRBound) {
    for (unsigned long a : small)
      if (miller_rabin_witness(n, Int(a))) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
}

std::vector<std::uint64_t> prime_sieve(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
  }
  return out;
}

namespace {

const std::vector<std::uint64_t>& trial_primes() {
  static const std::vector<std::uint64_t> primes = prime_sieve(1000000);
  return primes;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

/* Brent's cycle variant of Pollard's rho for word-sized composites. */
std::uint64_t rho_u64(std::uint64_t n, std::uint64_t c) {
  std::uint64_t x = 2, y = 2, d = 1, q = 1;
  std::uint64_t xs = x;
  const unsigned step = 128;
  for (std::uint64_t r = 1; d == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
    for (std::uint64_t k = 0; k < r && d == 1; k += step) {
      xs = y;
      std::uint64_t lim = std::min<std::uint64_t>(step, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = (mulmod_u64(y, y, n) + c) % n;
        std::uint64_t diff = x > y ? x - y : y - x;
        if (diff == 0) diff = 1;
        q = mulmod_u64(q, diff, n);
      }
      d = std::gcd(q, n);
    }
  }
  if (d == n) {
    /* backtrack one batch to recover the factor */
    d = 1;
    while (d == 1) {
      xs = (mulmod_u64(xs, xs, n) + c) % n;
      std::uint64_t diff = x > xs ? x - xs : xs - x;
      if (diff == 0) return n;
      d = std::gcd(diff, n);
    }
  }
  return d;
}

std::uint64_t budget_counter;
constexpr std::uint64_t kRhoBudget = 1u << 26;

void split(const Int& n, std::map<Int, unsigned>& acc);

void record(const Int& p, unsigned e, std::map<Int, unsigned>& acc) {
  acc[p] += e;
}

void split_composite(const Int& n, std::map<Int, unsigned>& acc) {
  /* strip perfect powers so rho only ever sees non-powers */
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Int, unsigned> sub;
        split(root, sub);
        for (const auto& [p, e] : sub) record(p, e * k, acc);
        return;
      }
    }
  }
  if (n.fits_ulong_p()) {
    std::uint64_t v = mpz_get_ui(n.get_mpz_t());
    for (std::uint64_t c = 1;; ++c) {
      if (++budget_counter > kRhoBudget)
        throw std::runtime_error("factorize: budget exceeded on cofactor " +
                                 n.get_str());
      std::uint64_t d = rho_u64(v, c);
      if (d != v && d != 1) {
        split(Int(static_cast<unsigned long>(d)), acc);
        split(Int(static_cast<unsigned long>(v / d)), acc);
        return;
      }
    }
  }
  /* bignum rho, only reached beyond word size */
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      if (++budget_counter > kRhoBudget)
        throw std::runtime_error("factorize: budget exceeded on cofactor " +
                                 n.get_str());
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = abs(x - y);
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n && d != 1) {
      split(d, acc);
      split(Int(n / d), acc);
      return;
    }
  }
}

void split(const Int& n, std::map<Int, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    record(n, 1, acc);
    return;
  }
  split_composite(n, acc);
}

}  // namespace

Factorization factorize(const Int& n) {
  if (n < 1) throw std::domain_error("factorize: argument must be positive");
  Int rest = n;
  std::map<Int, unsigned> acc;
  for (std::uint64_t p : trial_primes()) {
    if (Int(p) * p > rest) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    unsigned e = 0;
    do {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
    record(Int(static_cast<unsigned long>(p)), e, acc);
  }
  if (rest > 1) {
    budget_counter = 0;
    split(rest, acc);
  }
  Factorization f;
  for (const auto& [p, e] : acc) f.primes.emplace_back(p, e);
  return f;
}

SquarefreeDecomp squarefree_part(const Int& n) {
  if (n == 0) throw std::domain_error("squarefree_part: zero argument");
  Factorization f = factorize(abs(n));
  SquarefreeDecomp d{Int(sgn(n)), 1};
  for (const auto& [p, e] : f.primes) {
    if (e % 2 == 1) d.squarefree *= p;
    d.cofactor *= pow_int(p, e / 2);
  }
  return d;
}

int jacobi(const Int& a_in, const Int& n_in) {
  if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t()))
    throw std::domain_error("jacobi: lower argument must be odd and positive");
  Int a = a_in % n_in;
  if (a < 0) a += n_in;
  Int n = n_in;
  int t = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a >>= 1;
      unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
      t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int residue_symbol(const Int& p, const Int& q) {
  if (p == q) throw std::domain_error("residue_symbol: equal arguments");
  if (!is_prime(p) || !is_prime(q))
    throw std::domain_error("residue_symbol: arguments must be prime");
  if (q == 2) return jacobi(Int(2), p);
  return jacobi(p, q);
}

std::vector<std::vector<Int>> primes_matching(const PrimePattern& pattern,
                                              std::uint64_t bound,
                                              std::size_t max_results) {
  const std::size_t n = pattern.slots.size();
  std::vector<std::vector<Int>> results;
  if (n == 0) return results;
  std::vector<std::uint64_t> primes = prime_sieve(bound);
  std::vector<std::uint64_t> tuple(n, 0);

  /* conditions become checkable once every referenced slot is assigned */
  auto check_at = [&](std::size_t k) {
    for (const auto& sc : pattern.symbols) {
      std::size_t hi = static_cast<std::size_t>(std::max(sc.i, sc.j));
      if (hi != k) continue;
      if (residue_symbol(Int(static_cast<unsigned long>(tuple[sc.i])),
                         Int(static_cast<unsigned long>(tuple[sc.j]))) !=
          sc.sign)
        return false;
    }
    return true;
  };

  auto slot_ok = [&](std::size_t k, std::uint64_t p) {
    const auto& c = pattern.slots[k];
    if (c.modulus > 1 && p % c.modulus != c.residue) return false;
    for (std::size_t i = 0; i < k; ++i)
      if (tuple[i] == p) return false;
    for (std::uint64_t e : pattern.exclude)
      if (e == p) return false;
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == n) {
      std::vector<Int> out(n);
      for (std::size_t i = 0; i < n; ++i)
        out[i] = Int(static_cast<unsigned long>(tuple[i]));
      results.push_back(std::move(out));
      return max_results != 0 && results.size() >= max_results;
    }
    for (std::uint64_t p : primes) {
      if (!slot_ok(k, p)) continue;
      tuple[k] = p;
      if (!check_at(k)) continue;
      if (rec(k + 1)) return true;
    }
    tuple[k] = 0;
    return false;
  };
  rec(0);
  return results;
}

}  // namespace unitsig
