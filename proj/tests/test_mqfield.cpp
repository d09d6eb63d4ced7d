#include <random>

#include "doctest.h"
#include "unitsig/mqfield.hpp"
#include "unitsig/quadfield.hpp"

using namespace unitsig;

namespace {

MQElement random_element(const std::shared_ptr<const MQField>& K,
                         std::mt19937_64& rng) {
  MQElement x = mq_zero(K);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  for (unsigned S = 0; S < K->n(); ++S) {
    x.a[S] = Rat(num(rng), den(rng));
    x.a[S].canonicalize();
  }
  return x;
}

}  // namespace

TEST_CASE("make_mq_field validates the presentation") {
  CHECK_THROWS_AS((void)make_mq_field({Int(2), Int(8)}),
                  std::invalid_argument); /* 8 not squarefree */
  CHECK_THROWS_AS((void)make_mq_field({Int(2), Int(3), Int(6)}),
                  std::invalid_argument); /* 2*3*6 is a square */
  CHECK_THROWS_AS((void)make_mq_field({Int(5), Int(5)}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)make_mq_field({Int(1)}), std::invalid_argument);
  auto K = make_mq_field({Int(6), Int(10)});
  CHECK(K->t == 2);
  /* r_{1,2} = squarefree part of 60 = 15, cofactor 2 */
  CHECK(K->basis_radicand[3] == 15);
  CHECK(K->basis_cofactor[3] == 2);
}

TEST_CASE("gamma table realizes basis products") {
  auto K = make_mq_field({Int(6), Int(10), Int(14)});
  for (Subset S = 0; S < K->n(); ++S)
    for (Subset T = 0; T < K->n(); ++T) {
      const Int& g = K->gamma[S][T];
      CHECK(g * g * K->basis_radicand[S ^ T] ==
            K->basis_radicand[S] * K->basis_radicand[T]);
      MQElement prod = mq_sqrt_basis(K, S) * mq_sqrt_basis(K, T);
      MQElement expect = mq_sqrt_basis(K, S ^ T) * Rat(g);
      CHECK(prod == expect);
    }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(5);
  auto K = make_mq_field({Int(2), Int(3), Int(11)});
  for (int i = 0; i < 40; ++i) {
    MQElement x = random_element(K, rng);
    MQElement y = random_element(K, rng);
    MQElement z = random_element(K, rng);
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    if (!x.is_zero()) {
      CHECK(x * inv(x) == mq_rational(K, Rat(1)));
      CHECK(field_norm(x) != 0);
    }
  }
  CHECK_THROWS_AS((void)inv(mq_zero(K)), std::domain_error);
}

TEST_CASE("galois action: homomorphism, group law, norm") {
  std::mt19937_64 rng(9);
  auto K = make_mq_field({Int(5), Int(13)});
  for (int i = 0; i < 30; ++i) {
    MQElement x = random_element(K, rng);
    MQElement y = random_element(K, rng);
    for (Subset g = 0; g < K->n(); ++g) {
      CHECK(apply_galois(x * y, g) == apply_galois(x, g) * apply_galois(y, g));
      CHECK(apply_galois(x + y, g) == apply_galois(x, g) + apply_galois(y, g));
      for (Subset h = 0; h < K->n(); ++h)
        CHECK(apply_galois(apply_galois(x, g), h) == apply_galois(x, g ^ h));
    }
    MQElement nrm = mq_rational(K, Rat(1));
    for (Subset g = 0; g < K->n(); ++g) nrm = nrm * apply_galois(x, g);
    CHECK(nrm == mq_rational(K, field_norm(x)));
  }
  /* embedding g flips exactly the sqrt(r_S) with odd overlap */
  MQElement s3 = mq_sqrt_basis(K, 3); /* sqrt(65) */
  CHECK(apply_galois(s3, 1) == -s3);
  CHECK(apply_galois(s3, 3) == s3);
}

TEST_CASE("sign_at decides exactly, including near-zero values") {
  auto K = make_mq_field({Int(2), Int(3)});
  MQElement s2 = mq_sqrt_basis(K, 1);
  CHECK(sign_at(s2, 0) == 1);
  CHECK(sign_at(s2, 1) == -1);
  CHECK(sign_at(s2, 2) == 1);
  CHECK_THROWS_AS((void)sign_at(mq_zero(K), 0), std::domain_error);

  /* p/q a deep continued-fraction convergent of sqrt(2): p - q sqrt(2) is
     around 1e-24 but its sign is decided exactly */
  Int p(1), q(1), pp(1), qq(0);
  for (int i = 0; i < 40; ++i) {
    Int np = 2 * p + pp, nq = 2 * q + qq;
    pp = p; qq = q; p = np; q = nq;
  }
  MQElement tiny = mq_rational(K, Rat(p)) - s2 * Rat(q);
  int expect = (p * p - 2 * q * q) > 0 ? 1 : -1; /* sign(p - q sqrt 2) */
  CHECK(sign_at(tiny, 0) == expect);
  CHECK(sign_at(tiny, 1) == 1); /* p + q sqrt(2) > 0 */

  Signature s = signature(tiny * tiny);
  CHECK(s == 0); /* squares are totally positive */
}

TEST_CASE("signature bit layout") {
  auto K = make_mq_field({Int(3)});
  auto e = fundamental_unit(Int(3)); /* 2 + sqrt(3), conjugate 2 - sqrt(3) */
  CHECK(signature(embed_unit(K, 1, e)) == 0);
  auto K2 = make_mq_field({Int(2)});
  auto e2 = fundamental_unit(Int(2)); /* 1 + sqrt(2), conjugate negative */
  CHECK(signature(embed_unit(K2, 1, e2)) == 0b10);
  CHECK(signature(mq_rational(K2, Rat(-1))) == 0b11);
  CHECK_THROWS_AS((void)signature(mq_zero(K2)), std::domain_error);
}

TEST_CASE("sign precision cap raises instead of guessing") {
  unsigned long saved = sign_precision_cap();
  CHECK_THROWS_AS(set_sign_precision_cap(64), std::domain_error);
  auto K = make_mq_field({Int(2)});
  /* convergent with error around 2^-191, far below what the minimum cap of
     128 bits can separate from zero */
  Int p(1), q(1), pp(1), qq(0);
  for (int i = 0; i < 150; ++i) {
    Int np = 2 * p + pp, nq = 2 * q + qq;
    pp = p; qq = q; p = np; q = nq;
  }
  MQElement tiny = mq_rational(K, Rat(p)) - mq_sqrt_basis(K, 1) * Rat(q);
  set_sign_precision_cap(128);
  CHECK(sign_precision_cap() == 128);
  CHECK_THROWS_AS((void)sign_at(tiny, 0), std::runtime_error);
  set_sign_precision_cap(saved);
  CHECK(sign_at(tiny, 0) != 0);
}

TEST_CASE("embed_quadratic and embed_unit agree with subfield arithmetic") {
  auto K = make_mq_field({Int(2), Int(5)});
  for (Subset S = 1; S < 4; ++S) {
    Int r = K->basis_radicand[S];
    auto e = fundamental_unit(r);
    MQElement u = embed_unit(K, S, e);
    CHECK(u == embed_quadratic(K, S, e.x, e.y));
    /* unit times its subfield conjugate is the norm */
    Subset flip = 0;
    for (Subset g = 1; g < 4; ++g)
      if (apply_galois(mq_sqrt_basis(K, S), g) != mq_sqrt_basis(K, S)) {
        flip = g;
        break;
      }
    CHECK(u * apply_galois(u, flip) == mq_rational(K, Rat(e.norm)));
  }
  auto wrong = fundamental_unit(Int(3));
  CHECK_THROWS_AS((void)embed_unit(K, 1, wrong), std::invalid_argument);
}

TEST_CASE("is_square finds exact roots and rejects non-squares") {
  std::mt19937_64 rng(13);
  auto K = make_mq_field({Int(7), Int(11)});
  for (int i = 0; i < 25; ++i) {
    MQElement y = random_element(K, rng);
    if (y.is_zero()) continue;
    MQElement sq = y * y;
    auto r = is_square(sq);
    REQUIRE(r.has_value());
    CHECK(*r * *r == sq);
    CHECK(sign_at(*r, 0) == 1);
  }
  CHECK_FALSE(is_square(mq_sqrt_basis(K, 1)).has_value());
  CHECK_FALSE(is_square(mq_rational(K, Rat(3))).has_value());
  CHECK_FALSE(is_square(mq_rational(K, Rat(-4))).has_value());
  auto two = is_square(mq_rational(K, Rat(44)));
  REQUIRE(two.has_value()); /* 44 = (2 sqrt(11))^2 */
  CHECK(*two == mq_sqrt_basis(K, 2) * Rat(2));
  auto zero = is_square(mq_zero(K));
  REQUIRE(zero.has_value());
  CHECK(zero->is_zero());
}

TEST_CASE("quadratic_subfields enumerates r_S in mask order") {
  auto K = make_mq_field({Int(3), Int(7), Int(11)});
  auto subs = quadratic_subfields(*K);
  REQUIRE(subs.size() == 7);
  for (unsigned i = 0; i < 7; ++i) {
    CHECK(subs[i].mask == i + 1);
    CHECK(subs[i].radicand == K->basis_radicand[i + 1]);
  }
  CHECK(subs[2].radicand == 21);
  CHECK(subs[6].radicand == 231);
}
