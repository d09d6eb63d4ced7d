#include "unitsig/quadfield.hpp"

#include <sstream>

namespace unitsig {

QuadField make_quad_field(const Int& d) {
  if (d <= 1) throw std::domain_error("quad field: radicand must be > 1");
  SquarefreeDecomp sq = squarefree_part(d);
  if (sq.cofactor != 1)
    throw std::domain_error("quad field: radicand " + d.get_str() +
                            " is not squarefree");
  QuadField k{d, mpz_fdiv_ui(d.get_mpz_t(), 4) == 1 ? d : Int(4 * d)};
  return k;
}

std::size_t QuadUnit::decimal_digits_of_floor() const {
  /* eps = (a + b*sqrt(d))/2 with integers a = 2x, b = 2y; floor differs from
   * (a + isqrt(b^2 d))/2 by at most 1, inside the reporting tolerance */
  Int a = Int(2 * x);
  Int b = Int(2 * y);
  Int s = isqrt(b * b * d);
  Int z = (a + s) / 2;
  return decimal_digits(z);
}

std::string QuadUnit::to_string() const {
  std::ostringstream os;
  if (is_integer(x) && is_integer(y))
    os << x << " + " << y << "*sqrt(" << d << ")";
  else
    os << "(" << Int(2 * x) << " + " << Int(2 * y) << "*sqrt(" << d << "))/2";
  return os.str();
}

QuadUnit fundamental_unit(const Int& d) {
  QuadField k = make_quad_field(d);
  const Int& D = k.disc;
  const int b = mpz_odd_p(D.get_mpz_t()) ? 1 : 0;
  const Int s = isqrt(D);

  /* Expand (b + sqrt(D))/2; state (P, Q) stays word-small relative to D.
   * Convergents h/k give xi_j = h_j + k_j*(sqrt(D) - b)/2 whose norm is
   * (-1)^(j+1) * Q_{j+1}/2, so the fundamental unit appears at the first
   * return of Q to its initial value 2. */
  Int P = b, Q = 2;
  Int h_prev = 1, h_prev2 = 0;
  Int k_prev = 0, k_prev2 = 1;
  int norm = 0;
  for (long j = 0;; ++j) {
    if (j > 100000000L)
      throw std::runtime_error("fundamental_unit: period budget exceeded");
    Int a = (P + s) / Q;
    Int h = a * h_prev + h_prev2;
    Int kk = a * k_prev + k_prev2;
    P = a * Q - P;
    Q = (D - P * P) / Q;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = kk;
    if (Q == 2) {
      norm = (j % 2 == 0) ? -1 : +1;
      break;
    }
  }

  QuadUnit eps;
  eps.d = d;
  eps.norm = norm;
  if (D == 4 * d) {
    eps.x = Rat(h_prev);
    eps.y = Rat(k_prev);
  } else {
    eps.x = Rat(2 * h_prev - k_prev, 2);
    eps.y = Rat(k_prev, 2);
  }
  eps.x.canonicalize();
  eps.y.canonicalize();
  if (eps.x * eps.x - d * eps.y * eps.y != norm)
    throw std::runtime_error("fundamental_unit: norm verification failed");
  return eps;
}

namespace {

/* Norm(eps + r) for rational r, an exact rational. */
Rat norm_shifted(const QuadUnit& eps, int r) {
  return (eps.x + r) * (eps.x + r) - eps.d * eps.y * eps.y;
}

}  // namespace

MData m_of_unit(const QuadUnit& eps, bool fundamental) {
  if (eps.norm != 1)
    throw std::domain_error("m_of_unit: m undefined for norm -1");
  QuadField k = make_quad_field(eps.d);

  Rat n1_rat = norm_shifted(eps, +1);
  if (!is_integer(n1_rat))
    throw std::runtime_error("m_of_unit: Norm(eps+1) not integral");
  Int n1(n1_rat.get_num());
  if (n1 <= 0) throw std::runtime_error("m_of_unit: Norm(eps+1) not positive");

  /* disc has few prime factors; valuations there determine m without ever
   * factoring the (possibly enormous) Norm(eps+1) */
  Factorization df = factorize(k.disc);
  Int m = 1;
  for (const auto& [p, e] : df.primes) {
    (void)e;
    if (valuation(n1, p) % 2 == 1) m *= p;
  }
  if (!is_square(Int(n1 / m)))
    throw std::runtime_error("m_of_unit: cofactor of m not a square");
  if (mpz_divisible_p(k.disc.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::runtime_error("m_of_unit: m does not divide the discriminant");
  if (fundamental && (m == 1 || m == eps.d))
    throw std::runtime_error("m_of_unit: degenerate m for a fundamental unit");

  MData md;
  md.m = m;
  auto a_root = sqrt_exact(Int(m * n1));
  if (!a_root) throw std::runtime_error("m_of_unit: m*Norm(eps+1) not square");
  md.A = Rat(*a_root, 2);
  md.A.canonicalize();
  /* from m*eps = (A - B sqrt(d))^2: matching coefficients gives B exactly */
  md.B = -Rat(m) * eps.y / (2 * md.A);
  md.B.canonicalize();

  if (md.A * md.A - eps.d * md.B * md.B != m)
    throw std::runtime_error("m_of_unit: A^2 - d B^2 != m");
  if (md.A * md.A + eps.d * md.B * md.B != Rat(m) * eps.x ||
      -2 * md.A * md.B != Rat(m) * eps.y)
    throw std::runtime_error("m_of_unit: m*eps != (A - B sqrt(d))^2");
  return md;
}

MData sqrt_unit_presentation(const QuadUnit& eps, bool fundamental) {
  MData md = m_of_unit(eps, fundamental);
  /* round trip: ((A - B sqrt d)/sqrt m)^2 = eps, already enforced except for
   * the sign of the square root; A > 0 fixes it */
  if (sgn(md.A) <= 0)
    throw std::runtime_error("sqrt_unit_presentation: A not positive");
  return md;
}

namespace {

bool all_one_mod_4_or_two(const Factorization& f) {
  for (const auto& [p, e] : f.primes) {
    (void)e;
    if (p != 2 && mpz_fdiv_ui(p.get_mpz_t(), 4) != 1) return false;
  }
  return true;
}

}  // namespace

std::optional<std::string> predict_norm_sign(const Factorization& f) {
  const auto& ps = f.primes;
  for (const auto& [p, e] : ps)
    if (e != 1)
      throw std::domain_error("predict_norm_sign: radicand not squarefree");
  if (!all_one_mod_4_or_two(f)) return std::nullopt;
  const std::size_t t = ps.size();
  bool has_two = !ps.empty() && ps.front().first == 2;

  if (t == 1 && !has_two) return "single prime 1 mod 4";

  if (t == 2) {
    /* p1 = 2 or 1 mod 4, p2 = 1 mod 4, (p1/p2) = -1 */
    if (residue_symbol(ps[0].first, ps[1].first) == -1)
      return "prime pair with symbol -1";
  }

  if (t == 3) {
    int minus = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (residue_symbol(ps[i].first, ps[j].first) == -1) ++minus;
    if (minus >= 2) return "prime triple with two symbols -1";
  }

  if (t % 2 == 1) {
    bool all_minus = true;
    for (std::size_t i = 0; i < t && all_minus; ++i)
      for (std::size_t j = i + 1; j < t && all_minus; ++j)
        if (residue_symbol(ps[i].first, ps[j].first) != -1) all_minus = false;
    if (all_minus) return "odd prime count, all symbols -1";
  }
  return std::nullopt;
}

std::optional<std::string> predict_norm_sign(const Int& d) {
  if (d <= 1) throw std::domain_error("predict_norm_sign: d must be > 1");
  return predict_norm_sign(factorize(d));
}

GenusRelationReport genus_relation_report(const Int& d) {
  GenusRelationReport r;
  r.d = d;
  r.eps = fundamental_unit(d);
  Factorization df = factorize(make_quad_field(d).disc);
  if (r.eps.norm == -1) {
    r.ordinary_case = 3;
    for (const auto& [p, e] : factorize(d).primes) {
      (void)e;
      r.relation_primes.push_back(p);
    }
  } else {
    MData md = m_of_unit(r.eps);
    r.m = md.m;
    for (const auto& [p, e] : factorize(md.m).primes) {
      (void)e;
      r.relation_primes.push_back(p);
    }
    bool has_3mod4 = false;
    for (const auto& [p, e] : factorize(d).primes) {
      (void)e;
      if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) has_3mod4 = true;
    }
    r.ordinary_case = has_3mod4 ? 1 : 2;
  }
  return r;
}

}  // namespace unitsig
