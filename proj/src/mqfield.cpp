#include "unitsig/mqfield.hpp"

#include <mpfr.h>

#include <atomic>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "unitsig/arith.hpp"

namespace unitsig {

namespace {

unsigned popcount(Subset s) { return static_cast<unsigned>(std::popcount(s)); }

void require_same_field(const MQElement& x, const MQElement& y) {
  if (x.K.get() == y.K.get()) return;
  if (x.K && y.K && x.K->radicands == y.K->radicands) return;
  throw std::invalid_argument("MQElement: operands from different fields");
}

}  // namespace

std::shared_ptr<const MQField> make_mq_field(
    const std::vector<Int>& radicands) {
  if (radicands.empty())
    throw std::invalid_argument("make_mq_field: no radicands");
  if (radicands.size() > 16)
    throw std::invalid_argument("make_mq_field: too many radicands");
  auto K = std::make_shared<MQField>();
  K->t = static_cast<unsigned>(radicands.size());
  K->radicands = radicands;
  for (const Int& d : radicands) {
    if (d <= 1) throw std::invalid_argument("make_mq_field: radicand <= 1");
    SquarefreeDecomp sq = squarefree_part(d);
    if (sq.cofactor != 1)
      throw std::invalid_argument("make_mq_field: radicand " + d.get_str() +
                                  " is not squarefree");
  }

  const unsigned n = K->n();
  K->basis_radicand.assign(n, Int(1));
  K->basis_cofactor.assign(n, Int(1));
  std::vector<Int> product(n, Int(1));
  for (Subset S = 1; S < n; ++S) {
    Subset low = S & (~S + 1u);
    unsigned i = static_cast<unsigned>(std::countr_zero(low));
    product[S] = product[S ^ low] * radicands[i];
    SquarefreeDecomp sq = squarefree_part(product[S]);
    K->basis_radicand[S] = sq.squarefree;
    K->basis_cofactor[S] = sq.cofactor;
  }

  std::map<Int, Subset> seen;
  for (Subset S = 0; S < n; ++S) {
    auto [it, fresh] = seen.emplace(K->basis_radicand[S], S);
    if (fresh) continue;
    Subset dep = S ^ it->second; /* product over dep is a square */
    std::ostringstream msg;
    msg << "make_mq_field: degenerate presentation, product of {";
    bool first = true;
    for (unsigned i = 0; i < K->t; ++i) {
      if (!(dep & (1u << i))) continue;
      if (!first) msg << ", ";
      msg << radicands[i].get_str();
      first = false;
    }
    msg << "} is a square";
    throw std::invalid_argument(msg.str());
  }

  K->gamma.assign(n, std::vector<Int>(n));
  for (Subset S = 0; S < n; ++S) {
    for (Subset T = 0; T < n; ++T) {
      Int num = K->basis_radicand[S] * K->basis_radicand[T];
      Int g2 = num / K->basis_radicand[S ^ T];
      auto g = sqrt_exact(g2);
      if (g2 * K->basis_radicand[S ^ T] != num || !g)
        throw std::logic_error("make_mq_field: gamma table inconsistent");
      K->gamma[S][T] = *g;
    }
  }
  return K;
}

bool MQElement::is_zero() const {
  for (const Rat& c : a)
    if (c != 0) return false;
  return true;
}

bool MQElement::is_rational() const {
  for (std::size_t S = 1; S < a.size(); ++S)
    if (a[S] != 0) return false;
  return true;
}

MQElement mq_zero(std::shared_ptr<const MQField> K) {
  MQElement e;
  e.a.assign(K->n(), Rat(0));
  e.K = std::move(K);
  return e;
}

MQElement mq_rational(std::shared_ptr<const MQField> K, const Rat& c) {
  MQElement e = mq_zero(std::move(K));
  e.a[0] = c;
  return e;
}

MQElement mq_sqrt_basis(std::shared_ptr<const MQField> K, Subset S) {
  if (S >= K->n()) throw std::invalid_argument("mq_sqrt_basis: bad subset");
  MQElement e = mq_zero(std::move(K));
  e.a[S] = 1;
  return e;
}

MQElement MQElement::operator-() const {
  MQElement e = *this;
  for (Rat& c : e.a) c = -c;
  return e;
}

MQElement& MQElement::operator+=(const MQElement& o) {
  require_same_field(*this, o);
  for (std::size_t S = 0; S < a.size(); ++S) a[S] += o.a[S];
  return *this;
}

MQElement& MQElement::operator-=(const MQElement& o) {
  require_same_field(*this, o);
  for (std::size_t S = 0; S < a.size(); ++S) a[S] -= o.a[S];
  return *this;
}

MQElement operator+(const MQElement& x, const MQElement& y) {
  MQElement e = x;
  e += y;
  return e;
}

MQElement operator-(const MQElement& x, const MQElement& y) {
  MQElement e = x;
  e -= y;
  return e;
}

MQElement operator*(const MQElement& x, const MQElement& y) {
  require_same_field(x, y);
  const MQField& K = *x.K;
  MQElement e = mq_zero(x.K);
  for (Subset S = 0; S < K.n(); ++S) {
    if (x.a[S] == 0) continue;
    for (Subset T = 0; T < K.n(); ++T) {
      if (y.a[T] == 0) continue;
      e.a[S ^ T] += x.a[S] * y.a[T] * Rat(K.gamma[S][T]);
    }
  }
  return e;
}

MQElement operator*(const MQElement& x, const Rat& c) {
  MQElement e = x;
  for (Rat& v : e.a) v *= c;
  return e;
}

MQElement operator/(const MQElement& x, const Rat& c) {
  if (c == 0) throw std::domain_error("MQElement: division by zero");
  return x * Rat(1 / c);
}

bool operator==(const MQElement& x, const MQElement& y) {
  require_same_field(x, y);
  return x.a == y.a;
}

bool operator!=(const MQElement& x, const MQElement& y) { return !(x == y); }

MQElement apply_galois(const MQElement& x, Subset g) {
  MQElement e = x;
  for (Subset S = 0; S < x.K->n(); ++S)
    if (popcount(S & g) & 1u) e.a[S] = -e.a[S];
  return e;
}

Rat field_norm(const MQElement& x) {
  MQElement p = x;
  for (Subset g = 1; g < x.K->n(); ++g) p = p * apply_galois(x, g);
  if (!p.is_rational())
    throw std::logic_error("field_norm: conjugate product not rational");
  return p.a[0];
}

MQElement inv(const MQElement& x) {
  if (x.is_zero()) throw std::domain_error("inv: zero element");
  MQElement p = mq_rational(x.K, Rat(1));
  for (Subset g = 1; g < x.K->n(); ++g) p = p * apply_galois(x, g);
  MQElement nx = x * p;
  if (!nx.is_rational() || nx.a[0] == 0)
    throw std::logic_error("inv: conjugate product not rational");
  MQElement r = p / nx.a[0];
  if (!(x * r == mq_rational(x.K, Rat(1))))
    throw std::logic_error("inv: verification failed");
  return r;
}

/* ---- exact signs via outward-rounded interval evaluation ---- */

namespace {

std::atomic<unsigned long> g_sign_precision_cap{1ul << 22};

struct Mpfr {
  mpfr_t x;
  explicit Mpfr(mpfr_prec_t p) { mpfr_init2(x, p); }
  ~Mpfr() { mpfr_clear(x); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

/* -1, 0 or +1 when the interval around the value of x at embedding g
 * excludes or fails to exclude zero at this precision (0 = undecided). */
int interval_sign_once(const MQElement& x, Subset g, mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec), qlo(prec), qhi(prec), rlo(prec), rhi(prec),
      term(prec);
  mpfr_set_zero(lo.x, 0);
  mpfr_set_zero(hi.x, 0);
  for (Subset S = 0; S < x.K->n(); ++S) {
    if (x.a[S] == 0) continue;
    Rat c = (popcount(S & g) & 1u) ? Rat(-x.a[S]) : x.a[S];
    mpfr_set_q(qlo.x, c.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(qhi.x, c.get_mpq_t(), MPFR_RNDU);
    mpfr_set_z(rlo.x, x.K->basis_radicand[S].get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(rhi.x, x.K->basis_radicand[S].get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(rlo.x, rlo.x, MPFR_RNDD);
    mpfr_sqrt(rhi.x, rhi.x, MPFR_RNDU);
    if (sgn(c) > 0) {
      mpfr_mul(term.x, qlo.x, rlo.x, MPFR_RNDD);
      mpfr_add(lo.x, lo.x, term.x, MPFR_RNDD);
      mpfr_mul(term.x, qhi.x, rhi.x, MPFR_RNDU);
      mpfr_add(hi.x, hi.x, term.x, MPFR_RNDU);
    } else {
      mpfr_mul(term.x, qlo.x, rhi.x, MPFR_RNDD);
      mpfr_add(lo.x, lo.x, term.x, MPFR_RNDD);
      mpfr_mul(term.x, qhi.x, rlo.x, MPFR_RNDU);
      mpfr_add(hi.x, hi.x, term.x, MPFR_RNDU);
    }
  }
  if (mpfr_sgn(lo.x) > 0) return 1;
  if (mpfr_sgn(hi.x) < 0) return -1;
  return 0;
}

}  // namespace

unsigned long sign_precision_cap() { return g_sign_precision_cap.load(); }

void set_sign_precision_cap(unsigned long bits) {
  if (bits < 128) throw std::domain_error("set_sign_precision_cap: below 128");
  g_sign_precision_cap.store(bits);
}

int sign_at(const MQElement& x, Subset g) {
  if (g >= x.K->n()) throw std::invalid_argument("sign_at: bad embedding");
  Subset support = 0;
  unsigned terms = 0;
  for (Subset S = 0; S < x.K->n(); ++S)
    if (x.a[S] != 0) {
      support = S;
      ++terms;
    }
  if (terms == 0) throw std::domain_error("sign_at: zero element");
  if (terms == 1) {
    int s = sgn(x.a[support]);
    return (popcount(support & g) & 1u) ? -s : s;
  }
  const unsigned long cap = g_sign_precision_cap.load();
  for (unsigned long prec = 128; prec <= cap; prec *= 2) {
    int s = interval_sign_once(x, g, static_cast<mpfr_prec_t>(prec));
    if (s != 0) return s;
  }
  throw std::runtime_error("sign_at: precision cap exceeded");
}

Signature signature(const MQElement& x) {
  if (x.K->t > 6) throw std::domain_error("signature: rank above 6");
  Signature sig = 0;
  for (Subset g = 0; g < x.K->n(); ++g)
    if (sign_at(x, g) < 0) sig |= Signature(1) << g;
  return sig;
}

std::vector<QuadraticSubfield> quadratic_subfields(const MQField& K) {
  std::vector<QuadraticSubfield> out;
  for (Subset S = 1; S < K.n(); ++S)
    out.push_back({S, K.basis_radicand[S]});
  return out;
}

MQElement embed_quadratic(std::shared_ptr<const MQField> K, Subset S,
                          const Rat& x, const Rat& y) {
  if (S == 0 || S >= K->n())
    throw std::invalid_argument("embed_quadratic: bad subset");
  MQElement e = mq_zero(std::move(K));
  e.a[0] = x;
  e.a[S] = y;
  return e;
}

MQElement embed_unit(std::shared_ptr<const MQField> K, Subset S,
                     const QuadUnit& u) {
  if (S == 0 || S >= K->n())
    throw std::invalid_argument("embed_unit: bad subset");
  if (u.d != K->basis_radicand[S])
    throw std::invalid_argument("embed_unit: radicand mismatch");
  return embed_quadratic(std::move(K), S, u.x, u.y);
}

/* ---- square roots by tower descent ---- */

namespace {

std::optional<MQElement> is_square_level(const MQElement& u, unsigned level) {
  if (level == 0) {
    auto root = sqrt_exact(u.a[0]);
    if (!root) return std::nullopt;
    return mq_rational(u.K, *root);
  }
  const Subset hi = Subset(1) << (level - 1);
  const Int& d = u.K->radicands[level - 1];

  MQElement A = mq_zero(u.K), B = mq_zero(u.K);
  for (Subset S = 0; S < hi; ++S) {
    A.a[S] = u.a[S];
    B.a[S] = u.a[S | hi] / Rat(u.K->gamma[S][hi]);
  }

  auto lift = [&](const MQElement& x, const MQElement& y) {
    MQElement r = x;
    for (Subset S = 0; S < hi; ++S)
      r.a[S | hi] = y.a[S] * Rat(u.K->gamma[S][hi]);
    return r;
  };

  if (B.is_zero()) {
    if (auto x = is_square_level(A, level - 1)) return x;
    if (auto y = is_square_level(A / Rat(d), level - 1)) {
      MQElement r = lift(mq_zero(u.K), *y);
      if (r * r == u) return r;
    }
    return std::nullopt;
  }

  MQElement norm_down = A * A - B * B * Rat(d);
  auto w = is_square_level(norm_down, level - 1);
  if (!w) return std::nullopt;
  for (int variant = 0; variant < 2; ++variant) {
    MQElement wv = variant == 0 ? *w : -*w;
    MQElement half = (A + wv) / Rat(2);
    if (half.is_zero()) continue;
    auto x = is_square_level(half, level - 1);
    if (!x || x->is_zero()) continue;
    MQElement y = B * inv(*x + *x);
    MQElement r = lift(*x, y);
    if (r * r == u) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<MQElement> is_square(const MQElement& u) {
  if (u.is_zero()) return mq_zero(u.K);
  auto root = is_square_level(u, u.K->t);
  if (!root) return std::nullopt;
  if (sign_at(*root, 0) < 0) return -*root;
  return root;
}

std::string MQElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (Subset S = 0; S < K->n(); ++S) {
    if (a[S] == 0) continue;
    Rat c = a[S];
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    Rat ac = abs(c);
    if (S == 0) {
      out << ac.get_str();
    } else {
      if (ac != 1) out << ac.get_str() << "*";
      out << "sqrt(" << K->basis_radicand[S].get_str() << ")";
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace unitsig
