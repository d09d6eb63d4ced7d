#include "doctest.h"
#include "unitsig/arith.hpp"
#include "unitsig/quadfield.hpp"

using namespace unitsig;

namespace {

/* Smallest b >= 1 with d b^2 -+ 4 a perfect square gives the fundamental
 * unit (a + b sqrt(d))/2 of the maximal order: units > 1 are ordered by
 * their sqrt(d)-coefficient, and norm -+4 solutions with d != 1 mod 4 are
 * automatically even in both coordinates. */
QuadUnit pell_oracle(long d) {
  for (Int b = 1;; ++b) {
    for (int s : {-4, 4}) {
      Int a2 = d * b * b + s;
      if (a2 <= 0) continue;
      if (auto a = sqrt_exact(a2)) {
        QuadUnit u;
        u.d = d;
        u.x = Rat(*a, 2);
        u.y = Rat(b, 2);
        u.x.canonicalize();
        u.y.canonicalize();
        u.norm = s < 0 ? -1 : 1;
        return u;
      }
    }
  }
}

}  // namespace

TEST_CASE("fundamental_unit against the Pell oracle for d <= 130") {
  for (long d = 2; d <= 130; ++d) {
    if (squarefree_part(Int(d)).cofactor != 1) continue;
    auto e = fundamental_unit(Int(d));
    auto o = pell_oracle(d);
    CHECK(e.x == o.x);
    CHECK(e.y == o.y);
    CHECK(e.norm == o.norm);
    /* exact norm identity and ring membership */
    CHECK(e.x * e.x - d * e.y * e.y == e.norm);
    Int a(2 * e.x), b(2 * e.y);
    if (d % 4 != 1) {
      CHECK(is_integer(e.x));
      CHECK(is_integer(e.y));
    } else {
      CHECK((a - b) % 2 == 0);
    }
  }
}

TEST_CASE("reference units") {
  auto e = fundamental_unit(Int(145));
  CHECK(e.to_string() == "12 + 1*sqrt(145)");
  CHECK(e.norm == -1);
  CHECK(e.decimal_digits_of_floor() == 2);
  e = fundamental_unit(Int(82));
  CHECK(e.to_string() == "9 + 1*sqrt(82)");
  e = fundamental_unit(Int(5));
  CHECK(e.to_string() == "(1 + 1*sqrt(5))/2");
  CHECK(e.norm == -1);
  e = fundamental_unit(Int(65));
  CHECK(e.to_string() == "8 + 1*sqrt(65)");
  CHECK(e.norm == -1);
}

TEST_CASE("fundamental_unit input validation") {
  CHECK_THROWS_AS((void)fundamental_unit(Int(1)), std::domain_error);
  CHECK_THROWS_AS((void)fundamental_unit(Int(4)), std::domain_error);
  CHECK_THROWS_AS((void)fundamental_unit(Int(12)), std::domain_error);
  CHECK_THROWS_AS((void)fundamental_unit(Int(-7)), std::domain_error);
}

TEST_CASE("m_of_unit against the norm of eps+1") {
  for (long d = 2; d <= 400; ++d) {
    if (squarefree_part(Int(d)).cofactor != 1) continue;
    auto e = fundamental_unit(Int(d));
    if (e.norm == -1) {
      CHECK_THROWS_AS((void)m_of_unit(e), std::domain_error);
      continue;
    }
    auto md = m_of_unit(e);
    /* m = squarefree kernel of Norm(eps + 1) */
    Rat nrm = (e.x + 1) * (e.x + 1) - d * e.y * e.y;
    CHECK(is_integer(nrm));
    Int n(nrm.get_num());
    CHECK(squarefree_part(n).squarefree == md.m);
    /* m | disc, m not in {1, d} for a fundamental unit */
    Int disc = d % 4 == 1 ? Int(d) : Int(4 * d);
    CHECK(disc % md.m == 0);
    CHECK(md.m != 1);
    CHECK(md.m != d);
    /* m * eps = (A - B sqrt(d))^2 with A > 0 > B */
    CHECK(md.A > 0);
    CHECK(md.B < 0);
    CHECK(md.A * md.A + d * md.B * md.B == md.m * e.x);
    CHECK(-2 * md.A * md.B == md.m * e.y);
  }
}

TEST_CASE("sqrt_unit_presentation round-trips") {
  for (long d : {7, 14, 33, 34, 119, 253}) {
    auto e = fundamental_unit(Int(d));
    REQUIRE(e.norm == 1);
    auto md = sqrt_unit_presentation(e);
    CHECK(md.m == m_of_unit(e).m);
  }
}

TEST_CASE("m-values of the worked deficiency-3 radicands") {
  CHECK(m_of_unit(fundamental_unit(Int(683333))).m == 22043);
  CHECK(m_of_unit(fundamental_unit(Int(304513))).m == 47);
  CHECK(m_of_unit(fundamental_unit(Int(98021))).m == 77);
}

TEST_CASE("predict_norm_sign is sound and fires on the stated criteria") {
  unsigned fired = 0;
  for (long d = 2; d <= 2000; ++d) {
    if (squarefree_part(Int(d)).cofactor != 1) continue;
    auto why = predict_norm_sign(Int(d));
    if (!why) continue;
    ++fired;
    CHECK(fundamental_unit(Int(d)).norm == -1);
  }
  CHECK(fired > 100);
  CHECK(predict_norm_sign(Int(5)).has_value());
  CHECK(predict_norm_sign(Int(2)).has_value());
  CHECK(predict_norm_sign(Int(65)).has_value());     /* 5*13, (5/13) = -1 */
  CHECK_FALSE(predict_norm_sign(Int(3)).has_value());/* 3 mod 4 factor */
  CHECK_FALSE(predict_norm_sign(Int(34)).has_value());
}

TEST_CASE("genus_relation_report trichotomy") {
  auto g = genus_relation_report(Int(30)); /* norm +1, q = 3 divides d */
  CHECK(g.ordinary_case == 1);
  CHECK(g.m.has_value());
  g = genus_relation_report(Int(5));
  CHECK(g.ordinary_case == 3);
  CHECK_FALSE(g.m.has_value());
  g = genus_relation_report(Int(221)); /* 13*17, eps = (15+sqrt(221))/2 */
  CHECK(g.eps.norm == 1);
  CHECK(g.ordinary_case == 2);
  for (long d : {10, 15, 26, 30, 65, 85, 221}) {
    CAPTURE(d);
    g = genus_relation_report(Int(d));
    CHECK(g.eps.norm == (g.ordinary_case == 3 ? -1 : 1));
    /* relation primes come from m (norm +1) or d itself (norm -1); either
       way they divide the discriminant */
    Int disc = d % 4 == 1 ? Int(d) : Int(4 * d);
    for (const Int& p : g.relation_primes) CHECK(disc % p == 0);
    if (g.ordinary_case == 3) CHECK(g.relation_primes.size() >= 1);
  }
}

TEST_CASE("floor digit count of large units") {
  /* d = 46 has eps = 24335 + 3588 sqrt(46), floor 48669 */
  auto e = fundamental_unit(Int(46));
  CHECK(e.x == 24335);
  CHECK(e.decimal_digits_of_floor() == 5);
}
