#include "doctest.h"

#include "unitsig/arith.hpp"
#include "unitsig/families.hpp"
#include "unitsig/quadfield.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

using namespace unitsig;

namespace {

std::vector<Int> ints(const std::vector<long>& v) {
  return std::vector<Int>(v.begin(), v.end());
}

/* first-principles rescan of the subset constraints behind possible_m:
   S1 must look like a square from every outside prime, and the outside
   block must multiply to `outside_target` at every inside prime */
std::vector<std::uint32_t> oracle_masks(const ResidueAssignment& a,
                                        int outside_target) {
  unsigned n = a.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    bool ok = true;
    for (unsigned j = 0; j < n && ok; ++j) {
      if (mask & (1u << j)) continue;
      int prod = 1;
      for (unsigned i = 0; i < n; ++i)
        if (mask & (1u << i)) prod *= a.symbol(i, j);
      ok = prod == 1;
    }
    for (unsigned i = 0; i < n && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      int prod = 1;
      for (unsigned j = 0; j < n; ++j)
        if (!(mask & (1u << j))) prod *= a.symbol(j, i);
      ok = prod == outside_target;
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

const FamilyFact* find_fact(const FamilyVerdict& v, const std::string& name) {
  for (const auto& f : v.facts)
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("ResidueAssignment computes and completes symbol tables") {
  auto a = ResidueAssignment::from_primes(ints({3, 7, 11, 19}));
  CHECK(a.concrete());
  CHECK(a.size() == 4);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) {
      if (i == j) continue;
      CHECK(a.symbol(i, j) == residue_symbol(a.primes()[i], a.primes()[j]));
      /* distinct primes 3 mod 4: reciprocity flips the symbol */
      CHECK(a.symbol(i, j) == -a.symbol(j, i));
    }

  auto s = ResidueAssignment::from_symbols(4, {1, -1, 1, 1, -1, 1}, true);
  CHECK_FALSE(s.concrete());
  CHECK(s.symbol(0, 1) == 1);
  CHECK(s.symbol(1, 0) == -1);
  CHECK(s.symbol(0, 2) == -1);
  CHECK(s.symbol(2, 0) == 1);
  CHECK(s.symbol(2, 3) == 1);
  CHECK(s.symbol(3, 2) == -1);

  auto sym = ResidueAssignment::from_symbols(3, {1, -1, 1}, false);
  CHECK(sym.symbol(0, 1) == sym.symbol(1, 0));
  CHECK(sym.symbol(0, 2) == sym.symbol(2, 0));

  auto r = a.restrict_to({0, 2, 3});
  CHECK(r.size() == 3);
  CHECK(r.primes() == ints({3, 11, 19}));
  CHECK(r.symbol(1, 2) == a.symbol(2, 3));

  CHECK_THROWS_AS(ResidueAssignment::from_primes(ints({4, 7})),
                  std::invalid_argument);
  CHECK_THROWS_AS(ResidueAssignment::from_primes(ints({7, 7})),
                  std::invalid_argument);
  CHECK_THROWS_AS(ResidueAssignment::from_symbols(4, {1, -1}, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(ResidueAssignment::from_symbols(3, {1, 0, 1}, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(a.restrict_to({0, 7}), std::invalid_argument);
}

TEST_CASE("possible_m matches the constraint rescan on all 64 symbol tables") {
  for (unsigned cfg = 0; cfg < 64; ++cfg) {
    CAPTURE(cfg);
    std::vector<int> upper;
    for (unsigned k = 0; k < 6; ++k)
      upper.push_back(cfg & (1u << k) ? -1 : 1);
    auto a = ResidueAssignment::from_symbols(4, upper, true);
    auto cand = possible_m(a);
    CHECK(cand.n == 4);
    CHECK(cand.values.empty()); /* symbolic input has no concrete products */
    CHECK(cand.masks == oracle_masks(a, -1));
  }
  /* hand-checked anchor: the all-plus upper triangle admits exactly the
     blocks {q1}, {q2,q3} and {q1,q2,q3} */
  auto all_plus = possible_m(
      ResidueAssignment::from_symbols(4, {1, 1, 1, 1, 1, 1}, true));
  CHECK(all_plus.masks == std::vector<std::uint32_t>{1, 6, 7});
}

TEST_CASE("possible_m_three_primes matches the rescan on all 8 tables") {
  for (unsigned cfg = 0; cfg < 8; ++cfg) {
    CAPTURE(cfg);
    std::vector<int> upper;
    for (unsigned k = 0; k < 3; ++k)
      upper.push_back(cfg & (1u << k) ? -1 : 1);
    auto a = ResidueAssignment::from_symbols(3, upper, false);
    auto cand = possible_m_three_primes(a);
    CHECK(cand.masks == oracle_masks(a, 1));
  }
}

TEST_CASE("candidate engines validate their prime patterns") {
  CHECK_THROWS_AS(possible_m(ResidueAssignment::from_primes(ints({3, 7, 11}))),
                  std::domain_error);
  CHECK_THROWS_AS(
      possible_m(ResidueAssignment::from_primes(ints({5, 7, 11, 19}))),
      std::domain_error);
  CHECK_THROWS_AS(possible_m_three_primes(
                      ResidueAssignment::from_primes(ints({3, 13, 17}))),
                  std::domain_error);
  /* 2 counts as 1 mod 4 for the three-prime engine */
  auto ok = possible_m_three_primes(
      ResidueAssignment::from_primes(ints({2, 13, 17})));
  CHECK(ok.n == 3);
}

TEST_CASE("possible_m is sound: the true m-block always qualifies") {
  std::vector<long> ps = {3, 7, 11, 19, 23, 31, 43};
  for (unsigned sel = 0; sel < (1u << ps.size()); ++sel) {
    if (__builtin_popcount(sel) != 4) continue;
    std::vector<Int> primes;
    for (unsigned i = 0; i < ps.size(); ++i)
      if (sel & (1u << i)) primes.emplace_back(ps[i]);
    CAPTURE(primes[0].get_si());
    CAPTURE(primes[1].get_si());
    CAPTURE(primes[2].get_si());
    CAPTURE(primes[3].get_si());
    Int d = primes[0] * primes[1] * primes[2] * primes[3];
    auto eps = fundamental_unit(d);
    REQUIRE(eps.norm == 1);
    Int m = m_of_unit(eps).m;
    std::uint32_t mask = 0;
    for (unsigned i = 0; i < 4; ++i)
      if (m % primes[i] == 0) mask |= 1u << i;
    auto cand = possible_m(ResidueAssignment::from_primes(primes));
    CHECK(cand.contains(mask));
    CHECK_FALSE(cand.contains(0));
    CHECK_FALSE(cand.contains((1u << 4) - 1));
    REQUIRE(cand.values.size() == cand.masks.size());
    for (std::size_t k = 0; k < cand.masks.size(); ++k) {
      Int v(1);
      for (unsigned i = 0; i < 4; ++i)
        if (cand.masks[k] & (1u << i)) v *= primes[i];
      CHECK(cand.values[k] == v);
      if (cand.masks[k] == mask) CHECK(v == m);
    }
  }
}

TEST_CASE("deficiency3_method_applies on the reference six primes") {
  auto six = ResidueAssignment::from_primes(ints({31, 47, 67, 7, 19, 11}));
  CHECK(deficiency3_method_applies(six));
  CHECK(deficiency3_method_applies(six, true));
  CHECK_THROWS_AS(
      deficiency3_method_applies(ResidueAssignment::from_primes(ints({3, 7}))),
      std::invalid_argument);
}

TEST_CASE("enumerate_residue_configs frozen counts and membership") {
  auto e = enumerate_residue_configs();
  CHECK(e.total == 32768);
  CHECK(e.count_forall == 14080);
  CHECK(e.count_unique == 6400);
  CHECK(e.forall_configs.size() == e.count_forall);
  CHECK(std::is_sorted(e.forall_configs.begin(), e.forall_configs.end()));
  auto has = [&](std::uint16_t c) {
    return std::binary_search(e.forall_configs.begin(), e.forall_configs.end(),
                              c);
  };
  CHECK(has(25679));
  CHECK(has(24559));
  /* the listing agrees with the predicate itself on a sample */
  for (unsigned cfg = 0; cfg < 32768; cfg += 257) {
    CAPTURE(cfg);
    std::vector<int> upper;
    for (unsigned k = 0; k < 15; ++k)
      upper.push_back(cfg & (1u << k) ? -1 : 1);
    auto a = ResidueAssignment::from_symbols(6, upper, true);
    CHECK(deficiency3_method_applies(a) == has(std::uint16_t(cfg)));
  }
}

TEST_CASE("density_constant produces frozen enclosures") {
  auto d3 = density_constant(1000);
  CHECK(d3.lo_str == "6.7847073625011009783848825e-01");
  CHECK(d3.hi_str == "6.8119551832340371268924524e-01");
  auto d5 = density_constant(100000);
  CHECK(d5.lo_str == "6.8099546096534826295341612e-01");
  CHECK(d5.hi_str == "6.8102270187342319988141139e-01");
  for (const auto& d : {d3, d5}) {
    CHECK(d.lo < d.hi);
    CHECK(d.lo < 0.68102);
    CHECK(0.68102 < d.hi);
  }
  CHECK(d5.hi - d5.lo < d3.hi - d3.lo);
  CHECK_THROWS_AS(density_constant(999), std::domain_error);
}

TEST_CASE("density assembly step matches the one-shot computation") {
  Rat partial(18, 25);
  unsigned used = 0;
  for (std::uint64_t p : prime_sieve(1000)) {
    if (p % 4 != 1 || p <= 5) continue;
    Int pp = Int(static_cast<unsigned long>(p)) * Int(static_cast<unsigned long>(p));
    partial *= Rat(pp - 4) / Rat(pp);
    ++used;
  }
  auto a = density_interval_from_product(partial, 1000, used);
  auto b = density_constant(1000);
  CHECK(a.primes_used == b.primes_used);
  CHECK(a.lo_str == b.lo_str);
  CHECK(a.hi_str == b.hi_str);
}

TEST_CASE("cyclotomic_deficiency_bound counts 3 mod 4 prime divisors") {
  auto c = cyclotomic_deficiency_bound(Int(4389)); /* 3*7*11*19 */
  CHECK(c.t == 2);
  CHECK(c.primes_3mod4 == ints({3, 7, 11, 19}));
  CHECK(c.witness_radicands == ints({21, 209}));
  CHECK(cyclotomic_deficiency_bound(Int(1024)).t == 0);
  auto c1 = cyclotomic_deficiency_bound(Int(21));
  CHECK(c1.t == 1);
  CHECK(c1.witness_radicands == ints({21}));
  CHECK(cyclotomic_deficiency_bound(Int(9)).t == 0);
  CHECK_THROWS_AS(cyclotomic_deficiency_bound(Int(0)), std::domain_error);
}

TEST_CASE("verify_family accepts reference members") {
  for (auto pq : std::vector<std::vector<long>>{{5, 29}, {2, 41}, {5, 13},
                                                {13, 17}}) {
    CAPTURE(pq[0]);
    auto v = verify_family("rank4", ints(pq));
    CHECK(v.in_family);
    CHECK(v.pass);
  }
  CHECK(verify_family("rank3-n2plus1", ints({3})).pass);
  for (long n : {0, 1, 6, 7}) {
    CAPTURE(n);
    auto v = verify_family("rank3-n2plus1", ints({n}));
    CHECK_FALSE(v.in_family);
    CHECK_FALSE(v.reject_reason.empty());
  }
  for (auto pq : std::vector<std::vector<long>>{{3, 11}, {7, 23}, {3, 7}}) {
    CAPTURE(pq[0]);
    CHECK(verify_family("q3mod4-pairs", ints(pq)).pass);
  }
  CHECK_FALSE(verify_family("q3mod4-pairs", ints({5, 7})).in_family);

  auto d3 = verify_family("deficiency3", ints({31, 47, 67, 7, 19, 11}));
  CHECK(d3.pass);
  auto* df = find_fact(d3, "deficiency");
  REQUIRE(df);
  CHECK(df->actual == "3");

  CHECK(verify_family("qmulti", ints({3, 7, 11, 19})).pass);
  CHECK(verify_family("qmulti", ints({3, 7, 11, 19, 23, 31})).pass);

  CHECK_THROWS_AS(verify_family("no-such-family", {}),
                  std::invalid_argument);
}

TEST_CASE("verify_family composite stacks deficiency3 blocks") {
  auto v = verify_family(
      "composite", ints({31, 47, 67, 7, 19, 11, 3, 23, 43, 59, 71, 79}));
  CHECK(v.in_family);
  CHECK(v.pass);
  for (const char* name : {"block 1 verified", "block 2 verified"}) {
    auto* f = find_fact(v, name);
    REQUIRE(f);
    CHECK(f->pass);
  }
  auto* bound = find_fact(v, "deficiency lower bound");
  REQUIRE(bound);
  CHECK(bound->expected == ">= 6");
  CHECK(bound->pass);
}

TEST_CASE("verify_family reports the octuple configuration honestly") {
  auto v = verify_family("octuple",
                         ints({11, 67, 991, 47, 31, 7, 199, 19}));
  CHECK(v.in_family);
  /* the residue pattern and all seven m-values check out, but the subfield
     units do not survive saturation, so the headline claim fails */
  CHECK_FALSE(v.pass);
  unsigned m_facts = 0;
  for (const auto& f : v.facts)
    if (f.name.rfind("m(", 0) == 0) {
      CHECK(f.pass);
      ++m_facts;
    }
  CHECK(m_facts == 7);
  auto* tp = find_fact(v, "all seven subfield units totally positive");
  REQUIRE(tp);
  CHECK(tp->pass);
  auto* adj = find_fact(v, "adjunctions");
  REQUIRE(adj);
  CHECK(adj->actual == "2");
  auto* rank = find_fact(v, "rank");
  REQUIRE(rank);
  CHECK(rank->actual == "3");
  auto* def = find_fact(v, "deficiency");
  REQUIRE(def);
  CHECK(def->actual == "5");
  auto* roots = find_fact(v, "adjoined square roots");
  REQUIRE(roots);
  CHECK(roots->actual.find("sqrt(e1*e2*e5)") != std::string::npos);
}

TEST_CASE("search_family rows are verified members in order") {
  auto r = search_family("rank4", 30);
  REQUIRE(!r.header.empty());
  bool saw_5_13 = false;
  std::vector<std::vector<std::string>> params_seen;
  for (const auto& row : r.rows) {
    REQUIRE(row.size() == r.header.size());
    if (row[0] == "5" && row[1] == "13") saw_5_13 = true;
    params_seen.push_back({row[0], row[1]});
  }
  CHECK(saw_5_13);

  auto q = search_family("q3mod4-pairs", 13);
  std::vector<std::pair<long, long>> expect;
  for (long a : {3, 7, 11})
    for (long b : {3, 7, 11})
      if (a < b && verify_family("q3mod4-pairs", ints({a, b})).pass)
        expect.emplace_back(a, b);
  REQUIRE(q.rows.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(q.rows[i][0] == std::to_string(expect[i].first));
    CHECK(q.rows[i][1] == std::to_string(expect[i].second));
  }

  CHECK(search_family("deficiency3", 24).rows.empty());
  CHECK_THROWS_AS(search_family("octuple", 100), std::invalid_argument);
}
