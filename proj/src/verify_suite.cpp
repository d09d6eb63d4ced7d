#include "unitsig/verify_suite.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

#include "unitsig/arith.hpp"
#include "unitsig/families.hpp"
#include "unitsig/mqfield.hpp"
#include "unitsig/quadfield.hpp"
#include "unitsig/sweeps.hpp"
#include "unitsig/unitgroup.hpp"

namespace unitsig {

namespace {

Claim claim(std::string id, std::string statement, bool pass,
            std::string detail = "") {
  Claim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.detail = std::move(detail);
  c.pass = pass;
  return c;
}

ClaimGroup finish(ClaimGroup g) {
  g.pass = true;
  for (const Claim& c : g.claims) g.pass = g.pass && c.pass;
  return g;
}

std::vector<Int> primes_in(std::uint64_t lo, std::uint64_t hi,
                           unsigned residue, unsigned mod) {
  std::vector<Int> out;
  for (std::uint64_t p : prime_sieve(hi))
    if (p >= lo && p % mod == residue) out.emplace_back((unsigned long)p);
  return out;
}

/* ---- 1: the two reference fundamental units ---- */
ClaimGroup group1(const VerifyOptions&) {
  ClaimGroup g;
  g.number = 1;
  g.title = "reference fundamental units (d = 145, 82)";
  auto e145 = fundamental_unit(145);
  g.claims.push_back(claim("1a", "epsilon(145) = 12 + 1*sqrt(145)",
                           e145.to_string() == "12 + 1*sqrt(145)",
                           e145.to_string()));
  g.claims.push_back(
      claim("1b", "Norm(epsilon(145)) = -1", e145.norm == -1));
  auto e82 = fundamental_unit(82);
  g.claims.push_back(claim("1c", "epsilon(82) = 9 + 1*sqrt(82)",
                           e82.to_string() == "9 + 1*sqrt(82)",
                           e82.to_string()));
  g.claims.push_back(claim("1d", "Norm(epsilon(82)) = -1", e82.norm == -1));
  return finish(g);
}

/* ---- 2: m-laws mod 8 and the pair m3 rule ---- */
ClaimGroup group2(const VerifyOptions& o) {
  ClaimGroup g;
  g.number = 2;
  g.title = "m-laws: q = 3 mod 8 gives m = 2q, q = 7 mod 8 gives m = 2; "
            "m(q1 q2) picks the residue";
  std::vector<Int> qs = primes_in(3, 499, 3, 4);
  auto rows = parallel::m_values(qs, o.threads);
  unsigned bad = 0;
  std::ostringstream detail;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Int expect = qs[i] % 8 == 3 ? Int(2 * qs[i]) : Int(2);
    if (rows[i].norm != 1 || rows[i].m != expect) {
      ++bad;
      detail << " q=" << qs[i].get_str();
    }
  }
  g.claims.push_back(claim(
      "2a", "mod-8 m-law for all " + std::to_string(qs.size()) +
                " primes q = 3 mod 4 below 500",
      bad == 0, bad ? "violations:" + detail.str() : ""));

  std::vector<Int> small = primes_in(3, 199, 3, 4);
  std::vector<Int> prods;
  std::vector<Int> expects;
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i + 1; j < small.size(); ++j) {
      prods.push_back(small[i] * small[j]);
      expects.push_back(residue_symbol(small[i], small[j]) == 1 ? small[i]
                                                                : small[j]);
    }
  auto prows = parallel::m_values(prods, o.threads);
  unsigned bad2 = 0;
  for (std::size_t i = 0; i < prows.size(); ++i)
    if (prows[i].norm != 1 || prows[i].m != expects[i]) ++bad2;
  g.claims.push_back(claim(
      "2b", "m(q1*q2) = q_i with (q_i/q_j) = +1 for all " +
                std::to_string(prods.size()) + " pairs q1 < q2 < 200",
      bad2 == 0));
  return finish(g);
}

/* ---- 3: residue conditions forcing norm -1 ---- */
ClaimGroup group3(const VerifyOptions& o) {
  ClaimGroup g;
  g.number = 3;
  g.title = "norm -1 from residue conditions (single primes, pairs, triples)";

  std::vector<Int> singles = primes_in(5, 9999, 1, 4);
  auto srows = parallel::unit_norms(singles, o.threads);
  unsigned bad1 = 0;
  for (const auto& r : srows)
    if (r.norm != -1) ++bad1;
  g.claims.push_back(claim("3a",
                           "Norm(eps(p)) = -1 for all " +
                               std::to_string(singles.size()) +
                               " primes p = 1 mod 4 below 10^4",
                           bad1 == 0));

  /* pairs p1 p2 < 10^5, p2 = 1 mod 4, p1 = 2 or 1 mod 4, (p1/p2) = -1 */
  std::vector<Int> firsts{Int(2)};
  for (const Int& p : primes_in(5, 49999, 1, 4)) firsts.push_back(p);
  std::vector<Int> pair_ds;
  std::vector<Int> seconds = primes_in(5, 99999, 1, 4);
  for (const Int& p1 : firsts)
    for (const Int& p2 : seconds) {
      if (p1 * p2 >= 100000) break; /* seconds is ascending */
      if (p1 == p2 || residue_symbol(p1, p2) != -1) continue;
      pair_ds.push_back(p1 * p2);
    }
  std::sort(pair_ds.begin(), pair_ds.end());
  pair_ds.erase(std::unique(pair_ds.begin(), pair_ds.end()), pair_ds.end());
  auto prows = parallel::unit_norms(pair_ds, o.threads);
  unsigned bad2 = 0;
  for (const auto& r : prows)
    if (r.norm != -1) ++bad2;
  g.claims.push_back(
      claim("3b",
            "Norm(eps(p1 p2)) = -1 for all " + std::to_string(pair_ds.size()) +
                " products below 10^5 with (p1/p2) = -1",
            bad2 == 0));

  /* triples from primes below 150, at least two of the three symbols -1 */
  std::vector<Int> trip1{Int(2)};
  for (const Int& p : primes_in(5, 149, 1, 4)) trip1.push_back(p);
  std::vector<Int> trip23 = primes_in(5, 149, 1, 4);
  std::vector<Int> triple_ds;
  for (std::size_t i = 0; i < trip1.size(); ++i)
    for (std::size_t j = 0; j < trip23.size(); ++j)
      for (std::size_t k = j + 1; k < trip23.size(); ++k) {
        const Int &p1 = trip1[i], &p2 = trip23[j], &p3 = trip23[k];
        if (p1 == p2 || p1 == p3) continue;
        if (p1 != 2 && p1 > p2) continue; /* unordered sets once */
        int minus = (residue_symbol(p1, p2) == -1) +
                    (residue_symbol(p1, p3) == -1) +
                    (residue_symbol(p2, p3) == -1);
        if (minus >= 2) triple_ds.push_back(p1 * p2 * p3);
      }
  std::sort(triple_ds.begin(), triple_ds.end());
  triple_ds.erase(std::unique(triple_ds.begin(), triple_ds.end()),
                  triple_ds.end());
  auto trows = parallel::unit_norms(triple_ds, o.threads);
  unsigned bad3 = 0;
  for (const auto& r : trows)
    if (r.norm != -1) ++bad3;
  g.claims.push_back(
      claim("3c",
            "Norm(eps(p1 p2 p3)) = -1 for all " +
                std::to_string(triple_ds.size()) +
                " qualifying triples from primes below 150",
            bad3 == 0));
  return finish(g);
}

/* ---- 4: biquadratic classification of q1, q2 = 3 mod 4 ---- */
ClaimGroup group4(const VerifyOptions& o) {
  ClaimGroup g;
  g.number = 4;
  g.title = "three-case classification of Q(sqrt(q1), sqrt(q2)), q = 3 mod 4";
  std::vector<Int> qs = primes_in(3, 199, 3, 4);
  std::vector<std::pair<Int, Int>> pairs;
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j)
      pairs.emplace_back(qs[i], qs[j]);
  auto rows = parallel::classify_pairs(pairs, o.threads);
  unsigned bad = 0;
  unsigned by_case[4] = {0, 0, 0, 0};
  unsigned case3_rank3 = 0, case3_rank2 = 0;
  std::ostringstream failing;
  for (const auto& r : rows) {
    ++by_case[r.case_number];
    if (r.case_number == 3) (r.rank == 3 ? case3_rank3 : case3_rank2)++;
    if (!r.matches_rule) {
      ++bad;
      failing << " (" << r.q1.get_str() << "," << r.q2.get_str() << ")";
    }
  }
  std::ostringstream detail;
  detail << "case1: " << by_case[1] << ", case2: " << by_case[2]
         << ", case3: " << by_case[3] << " (rank3: " << case3_rank3
         << ", rank2: " << case3_rank2 << ")";
  g.claims.push_back(claim(
      "4a",
      "fundamental system, rank, deficiency and m-laws match on all " +
          std::to_string(pairs.size()) + " pairs below 200",
      bad == 0, bad ? "failing:" + failing.str() : detail.str()));
  /* the mixed case must split in both directions */
  g.claims.push_back(claim("4b",
                           "case (3) realizes both the rank-3 and the rank-2 "
                           "branch of the residue split",
                           case3_rank3 > 0 && case3_rank2 > 0,
                           "rank3: " + std::to_string(case3_rank3) +
                               ", rank2: " + std::to_string(case3_rank2)));
  return finish(g);
}

/* ---- 5: the n^2 + 1 family ---- */
ClaimGroup group5(const VerifyOptions&) {
  ClaimGroup g;
  g.number = 5;
  g.title = "n^2+1 family: rank 3 with no adjunction for valid n in 2..30; "
            "n = 1 gives rank 4";
  unsigned verified = 0, failed = 0;
  std::ostringstream skipped, failing;
  for (long n = 2; n <= 30; ++n) {
    auto v = verify_family("rank3-n2plus1", {Int(n)});
    if (!v.in_family) {
      skipped << " " << n;
      continue;
    }
    ++verified;
    if (!v.pass) {
      ++failed;
      failing << " " << n;
    }
  }
  g.claims.push_back(claim(
      "5a",
      "all valid n in 2..30 verify (three norm -1 units, no adjunction, "
      "rank exactly 3)",
      failed == 0,
      std::to_string(verified) + " verified, skipped n:" + skipped.str() +
          (failed ? std::string(", failing:") + failing.str() : "")));
  auto K = make_mq_field({Int(2), Int(5)});
  auto rr = signature_rank(saturate(K));
  g.claims.push_back(claim("5b", "n = 1: Q(sqrt(2), sqrt(5)) has rank 4",
                           rr.rank == 4, "rank " + std::to_string(rr.rank)));
  return finish(g);
}

/* ---- 6: the first deficiency-3 biquadratic example ---- */
ClaimGroup group6(const VerifyOptions&) {
  ClaimGroup g;
  g.number = 6;
  g.title = "deficiency-3 example Q(sqrt(683333), sqrt(304513))";
  const Int d1(683333), d2(304513), d3(98021);
  const Int m_expect[3] = {Int(22043), Int(47), Int(77)};
  const Int ds[3] = {d1, d2, d3};
  bool m_ok = true;
  std::ostringstream mdetail;
  for (int i = 0; i < 3; ++i) {
    auto m = m_of_unit(fundamental_unit(ds[i]));
    m_ok = m_ok && m.m == m_expect[i];
    mdetail << (i ? ", " : "") << "m(" << ds[i].get_str()
            << ") = " << m.m.get_str();
  }
  g.claims.push_back(
      claim("6a", "m-triple is (22043, 47, 77)", m_ok, mdetail.str()));
  auto K = make_mq_field({d1, d2});
  auto U = saturate(K);
  auto rr = signature_rank(U);
  g.claims.push_back(claim(
      "6b", "saturation adjoins nothing: the subfield units are fundamental",
      U.adjunctions == 0,
      "adjunctions " + std::to_string(U.adjunctions)));
  g.claims.push_back(claim("6c", "deficiency 3 (signature rank 1)",
                           rr.deficiency == 3 && rr.rank == 1 && rr.exact,
                           "rank " + std::to_string(rr.rank) +
                               ", deficiency " +
                               std::to_string(rr.deficiency)));
  return finish(g);
}

/* ---- 7: prime triquadratics ---- */
ClaimGroup group7(const VerifyOptions& o) {
  ClaimGroup g;
  g.number = 7;
  g.title = "triquadratic deficiencies 0..5 and the rank >= 3 floor";
  struct Named {
    std::array<long, 3> p;
    unsigned expect;
  };
  const Named named[6] = {{{5, 13, 37}, 0}, {{5, 13, 17}, 1},
                          {{5, 13, 29}, 2}, {{3, 7, 11}, 3},
                          {{7, 23, 71}, 4}, {{7, 23, 127}, 5}};
  for (int i = 0; i < 6; ++i) {
    auto K = make_mq_field(
        {Int(named[i].p[0]), Int(named[i].p[1]), Int(named[i].p[2])});
    auto rr = signature_rank(saturate(K));
    std::ostringstream name;
    name << "Q(sqrt(" << named[i].p[0] << "), sqrt(" << named[i].p[1]
         << "), sqrt(" << named[i].p[2] << ")) has deficiency "
         << named[i].expect;
    g.claims.push_back(claim(
        "7" + std::string(1, char('a' + i)), name.str(),
        rr.deficiency == named[i].expect && rr.exact,
        "deficiency " + std::to_string(rr.deficiency)));
  }
  std::vector<std::array<Int, 3>> triples;
  auto ps = prime_sieve(99);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      for (std::size_t k = j + 1; k < ps.size(); ++k)
        triples.push_back({Int((unsigned long)ps[i]),
                           Int((unsigned long)ps[j]),
                           Int((unsigned long)ps[k])});
  auto rows = parallel::triquad_ranks(triples, o.threads);
  unsigned bad = 0;
  for (const auto& r : rows)
    if (r.rank < 3) ++bad;
  g.claims.push_back(claim(
      "7g",
      "signature rank >= 3 for all " + std::to_string(triples.size()) +
          " prime triples below 100",
      bad == 0));
  return finish(g);
}

/* ---- 8: the octuple example claimed to have deficiency 7 ---- */
ClaimGroup group8(const VerifyOptions&) {
  ClaimGroup g;
  g.number = 8;
  g.title = "octuple example (11, 67, 991, 47, 31, 7, 199, 19)";
  std::vector<Int> q;
  for (long p : {11, 67, 991, 47, 31, 7, 199, 19}) q.emplace_back(p);
  auto v = verify_family("octuple", q);
  bool m_facts = v.in_family;
  bool tp_fact = false;
  for (const auto& f : v.facts) {
    if (f.name.rfind("m(", 0) == 0) m_facts = m_facts && f.pass;
    if (f.name.rfind("all seven", 0) == 0) tp_fact = f.pass;
  }
  g.claims.push_back(claim(
      "8a", "residue-symbol hypotheses hold and all seven m-values match",
      m_facts, v.in_family ? "" : v.reject_reason));
  Int d(1);
  for (const Int& p : q) d *= p;
  auto m = m_of_unit(fundamental_unit(d));
  g.claims.push_back(claim(
      "8b", "m of the full degree-8 radicand is 6113479 = q3*q5*q7",
      m.m == 6113479 && m.m == q[2] * q[4] * q[6], "m = " + m.m.get_str()));
  auto e = fundamental_unit(d);
  std::size_t digits = e.decimal_digits_of_floor();
  Int a = Int(2 * e.x), b = Int(2 * e.y);
  std::string lead = Int((a + isqrt(b * b * d)) / 2).get_str().substr(0, 3);
  g.claims.push_back(
      claim("8c", "the unit of the full radicand has 8154 +- 1 decimal digits",
            digits >= 8153 && digits <= 8155,
            std::to_string(digits) + " digits, leading " + lead));
  g.claims.push_back(claim(
      "8d", "the seven subfield units are totally positive", tp_fact));
  /* expected red: the forced m-values give m1*m2*m5 = q2^2 * r5 and
   * m3*m4*m7 = q7^2 * r3, so e1*e2*e5 and e3*e4*e7 are squares in K and the
   * claimed fundamental system is not one. The exact computation below finds
   * 2 adjunctions, rank 3, deficiency 5 instead of (0, 1, 7). */
  auto K = make_mq_field({q[0] * q[1] * q[2] * q[3], q[0] * q[1] * q[4] * q[5],
                          q[0] * q[1] * q[6] * q[7]});
  auto U = saturate(K);
  auto rr = signature_rank(U);
  g.claims.push_back(claim(
      "8e",
      "the subfield units form a fundamental system: no adjunction, "
      "signature rank 1, deficiency 7",
      U.adjunctions == 0 && rr.rank == 1 && rr.deficiency == 7,
      "adjunctions " + std::to_string(U.adjunctions) + ", rank " +
          std::to_string(rr.rank) + ", deficiency " +
          std::to_string(rr.deficiency) +
          "; e1*e2*e5 and e3*e4*e7 are squares in K since the forced "
          "m-values satisfy m1*m2*m5 = q2^2*(q3*q4*q7*q8) and m3*m4*m7 = "
          "q7^2*(q3*q4*q5*q6)"));
  return finish(g);
}

/* ---- 9: residue-configuration enumeration ---- */
ClaimGroup group9(const VerifyOptions& o) {
  ClaimGroup g;
  g.number = 9;
  g.title = "6-prime residue configurations admitting the deficiency-3 "
            "construction";
  auto e = parallel::residue_configs(o.threads);
  std::ostringstream detail;
  detail << "every-candidate-triple count " << e.count_forall
         << ", unique-m count " << e.count_unique << " of " << e.total;
  g.claims.push_back(claim(
      "9a", "the every-candidate-triple interpretation counts 14080",
      e.count_forall == 14080, detail.str()));
  return finish(g);
}

/* ---- 10: the density constant ---- */
ClaimGroup group10(const VerifyOptions& o) {
  ClaimGroup g;
  g.number = 10;
  g.title = "density constant C = (18/25) prod (1 - 4/p^2)";
  auto d5 = parallel::density(100000, o.threads);
  g.claims.push_back(claim(
      "10a", "interval at prime bound 10^5 contains 0.6810 with width < 10^-3",
      d5.lo <= 0.6810 && 0.6810 <= d5.hi && d5.hi - d5.lo < 1e-3,
      "[" + d5.lo_str + ", " + d5.hi_str + "]"));
  auto d3 = parallel::density(1000, o.threads);
  g.claims.push_back(
      claim("10b", "the wider interval at prime bound 10^3 still contains "
                   "0.6810",
            d3.lo <= 0.6810 && 0.6810 <= d3.hi &&
                d3.hi - d3.lo > d5.hi - d5.lo,
            "[" + d3.lo_str + ", " + d3.hi_str + "]"));
  return finish(g);
}

/* ---- 11: totally positive independent units in Q(sqrt(q1 q2), ...) ---- */
ClaimGroup group11(const VerifyOptions&) {
  ClaimGroup g;
  g.number = 11;
  g.title = "deficiency lower bound t from pairwise products of primes "
            "3 mod 4";
  auto v2 = verify_family("qmulti", {Int(3), Int(7), Int(11), Int(19)});
  g.claims.push_back(claim("11a",
                           "t = 2: bound >= 2 for (3, 7, 11, 19)",
                           v2.in_family && v2.pass));
  auto v3 = verify_family(
      "qmulti", {Int(3), Int(7), Int(11), Int(19), Int(23), Int(31)});
  g.claims.push_back(claim("11b",
                           "t = 3: bound >= 3 for (3, 7, 11, 19, 23, 31)",
                           v3.in_family && v3.pass));
  return finish(g);
}

/* ---- 12: invariant-based property suites ---- */

Int random_squarefree(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  for (;;) {
    Int d(dist(rng));
    if (squarefree_part(d).cofactor == 1) return d;
  }
}

std::vector<Int> random_radicands(std::mt19937_64& rng, unsigned t) {
  for (;;) {
    std::set<Int> seen;
    while (seen.size() < t) seen.insert(random_squarefree(rng, 2, 300));
    std::vector<Int> ds(seen.begin(), seen.end());
    /* the generators must be multiplicatively independent mod squares */
    std::set<Int> subs;
    bool ok = true;
    for (std::uint32_t S = 1; S < (1u << t) && ok; ++S) {
      Int prod(1);
      for (unsigned i = 0; i < t; ++i)
        if (S >> i & 1) prod *= ds[i];
      ok = subs.insert(squarefree_part(prod).squarefree).second;
    }
    if (ok) return ds;
  }
}

ClaimGroup group12(const VerifyOptions& o) {
  ClaimGroup g;
  g.number = 12;
  g.title = "property suites (seeded sampling)";
  std::mt19937_64 rng(o.seed);

  /* 12a: subfield units restrict to characters of the Galois group */
  {
    unsigned fields = 0, bad = 0;
    while (fields < 100) {
      unsigned t = fields % 3 == 2 ? 3 : 2;
      auto ds = random_radicands(rng, t);
      auto K = make_mq_field(ds);
      ++fields;
      for (const auto& rec : subfield_units(K)) {
        Signature s = signature(embed_unit(K, rec.mask, rec.eps));
        for (unsigned a = 0; a < K->n(); ++a)
          for (unsigned b = 0; b < K->n(); ++b) {
            unsigned lhs = (s >> (a ^ b)) & 1;
            unsigned rhs = ((s >> a) & 1) ^ ((s >> b) & 1);
            if (lhs != rhs) ++bad;
          }
      }
    }
    g.claims.push_back(claim(
        "12a",
        "sign multiplicativity sign(gh(e)) = sign(g(e))sign(h(e)) for every "
        "subfield unit of 100 random fields",
        bad == 0));
  }

  /* 12b: subfield units give at most t+1 signatures, with equality cases */
  {
    std::mt19937_64 rng_b(o.seed + 1);
    unsigned bad = 0;
    for (unsigned i = 0; i < 60; ++i) {
      unsigned t = i % 3 == 2 ? 3 : 2;
      auto K = make_mq_field(random_radicands(rng_b, t));
      if (subfield_signature_rank(K) > t + 1) ++bad;
    }
    g.claims.push_back(claim(
        "12b1", "subfield signature rank <= t + 1 on 60 random fields",
        bad == 0));
    unsigned r2 = subfield_signature_rank(make_mq_field({Int(5), Int(13)}));
    unsigned r3 =
        subfield_signature_rank(make_mq_field({Int(5), Int(13), Int(37)}));
    g.claims.push_back(claim(
        "12b2",
        "equality t + 1 for pairwise non-residue primes 1 mod 4: (5,13) and "
        "(5,13,37)",
        r2 == 3 && r3 == 4,
        "ranks " + std::to_string(r2) + ", " + std::to_string(r3)));
  }

  /* 12c: is_square agrees with the m-class criterion on biquadratics whose
     three subfield units all have norm +1 */
  {
    std::vector<Int> qs = primes_in(3, 99, 3, 4);
    unsigned fields = 0, disagreements = 0, root_errors = 0;
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = i + 1; j < qs.size(); ++j) {
        auto K = make_mq_field({qs[i], qs[j]});
        auto recs = subfield_units(K);
        ++fields;
        for (int e1 = 0; e1 <= 1; ++e1)
          for (int e2 = 0; e2 <= 1; ++e2)
            for (int e3 = 0; e3 <= 1; ++e3) {
              if (!(e1 || e2 || e3)) continue;
              bool square_by_m =
                  kubota_square_class(*K, recs, {e1, e2, e3});
              MQElement u = mq_rational(K, Rat(1));
              const int ee[3] = {e1, e2, e3};
              for (int s = 0; s < 3; ++s)
                if (ee[s])
                  u = u * embed_unit(K, recs[s].mask, recs[s].eps);
              auto root = is_square(u);
              if (square_by_m != root.has_value()) ++disagreements;
              if (root && !(*root * *root == u)) ++root_errors;
            }
      }
    g.claims.push_back(claim(
        "12c",
        "m-class square criterion agrees with exact square roots on all 7 "
        "unit products of " + std::to_string(fields) +
            " all-norm-+1 biquadratics from primes below 100",
        disagreements == 0 && root_errors == 0,
        std::to_string(disagreements) + " disagreements, " +
            std::to_string(root_errors) + " bad roots"));
  }

  /* 12d: deficiency never drops when passing to a larger field */
  {
    std::mt19937_64 rng_d(o.seed + 2);
    unsigned checked = 0, bad = 0;
    while (checked < 200) {
      auto K = make_mq_field(random_radicands(rng_d, 2));
      auto rr = signature_rank(saturate(K));
      for (const auto& sub : quadratic_subfields(*K)) {
        unsigned sub_def =
            fundamental_unit(sub.radicand).norm == 1 ? 1 : 0;
        ++checked;
        if (sub_def > rr.deficiency) ++bad;
      }
    }
    g.claims.push_back(claim(
        "12d",
        "deficiency of a quadratic subfield never exceeds the field's "
        "deficiency (" + std::to_string(checked) + " sampled inclusions)",
        bad == 0));
  }

  /* 12e: saturation reaches a genuine fixpoint with at most 3 adjunctions
     in biquadratic fields */
  {
    std::mt19937_64 rng_e(o.seed + 3);
    unsigned bad_adj = 0, bad_fix = 0;
    for (unsigned i = 0; i < 30; ++i) {
      auto K = make_mq_field(random_radicands(rng_e, 2));
      auto U = saturate(K);
      if (U.adjunctions > 3) ++bad_adj;
      for (int e1 = 0; e1 <= 1; ++e1)
        for (int e2 = 0; e2 <= 1; ++e2)
          for (int e3 = 0; e3 <= 1; ++e3) {
            if (!(e1 || e2 || e3)) continue;
            MQElement u = mq_rational(K, Rat(1));
            const int ee[3] = {e1, e2, e3};
            for (int s = 0; s < 3; ++s)
              if (ee[s]) u = u * U.gens[s];
            /* neither the product nor its negative may be a square */
            if (is_square(u) || is_square(-u)) ++bad_fix;
          }
    }
    g.claims.push_back(claim(
        "12e",
        "saturation on 30 random biquadratics: at most 3 adjunctions and no "
        "generator product remains a square",
        bad_adj == 0 && bad_fix == 0,
        std::to_string(bad_adj) + " adjunction bounds, " +
            std::to_string(bad_fix) + " fixpoint violations"));
  }
  return finish(g);
}

}  // namespace

std::vector<ClaimGroup> run_verification(const VerifyOptions& opts) {
  using Fn = ClaimGroup (*)(const VerifyOptions&);
  static const Fn fns[12] = {group1, group2, group3,  group4,  group5,
                             group6, group7, group8,  group9,  group10,
                             group11, group12};
  std::vector<ClaimGroup> out;
  for (int i = 1; i <= 12; ++i)
    if (opts.section == 0 || opts.section == i) out.push_back(fns[i - 1](opts));
  if (out.empty())
    throw std::invalid_argument("run_verification: no group numbered " +
                                std::to_string(opts.section));
  return out;
}

bool all_passed(const std::vector<ClaimGroup>& groups) {
  for (const auto& g : groups)
    if (!g.pass) return false;
  return true;
}

}  // namespace unitsig
