#include "unitsig/sweeps.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "unitsig/arith.hpp"
#include "unitsig/mqfield.hpp"
#include "unitsig/quadfield.hpp"
#include "unitsig/unitgroup.hpp"

namespace unitsig {

namespace {

int team_size(int threads) {
  return threads > 0 ? threads : omp_get_max_threads();
}

NormRow norm_one(const Int& d) {
  NormRow r;
  r.d = d;
  r.norm = fundamental_unit(d).norm;
  return r;
}

MRow m_one(const Int& d) {
  MRow r;
  r.d = d;
  r.m = 0;
  auto e = fundamental_unit(d);
  r.norm = e.norm;
  if (e.norm == 1) r.m = m_of_unit(e).m;
  return r;
}

PairClassRow classify_one(const Int& q1, const Int& q2) {
  PairClassRow row;
  row.q1 = q1;
  row.q2 = q2;
  const bool b3 = q1 % 8 == 3 && q2 % 8 == 3;
  const bool b7 = q1 % 8 == 7 && q2 % 8 == 7;
  row.case_number = b3 ? 1 : (b7 ? 2 : 3);
  auto v = verify_family("q3mod4-pairs", {q1, q2});
  for (const auto& f : v.facts) {
    if (f.name == "rank")
      row.rank = static_cast<unsigned>(std::strtoul(f.actual.c_str(), nullptr, 10));
    if (f.name == "deficiency")
      row.deficiency =
          static_cast<unsigned>(std::strtoul(f.actual.c_str(), nullptr, 10));
  }
  row.matches_rule = v.pass;
  return row;
}

TriquadRankRow triquad_one(const std::array<Int, 3>& t) {
  TriquadRankRow row;
  row.p1 = t[0];
  row.p2 = t[1];
  row.p3 = t[2];
  auto K = make_mq_field({t[0], t[1], t[2]});
  /* the subfield units alone usually witness rank >= 3; saturation is the
     slow path */
  unsigned sub = subfield_signature_rank(K);
  if (sub >= 3) {
    row.rank = sub;
    row.exact = false;
    return row;
  }
  auto U = saturate(K);
  auto rr = signature_rank(U);
  row.rank = rr.rank;
  row.exact = rr.exact;
  return row;
}

std::vector<Rat> density_factors(std::uint64_t prime_bound) {
  std::vector<Rat> factors;
  for (std::uint64_t p : prime_sieve(prime_bound))
    if (p > 5 && p % 4 == 1) {
      Int pp = Int(static_cast<unsigned long>(p));
      pp *= pp;
      factors.emplace_back(Rat(pp - 4) / Rat(pp));
    }
  return factors;
}

Rat range_product(const std::vector<Rat>& f, std::size_t lo, std::size_t hi) {
  if (hi == lo) return Rat(1);
  if (hi - lo == 1) return f[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return range_product(f, lo, mid) * range_product(f, mid, hi);
}

}  // namespace

namespace serial {

std::vector<NormRow> unit_norms(const std::vector<Int>& ds) {
  std::vector<NormRow> out(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) out[i] = norm_one(ds[i]);
  return out;
}

std::vector<MRow> m_values(const std::vector<Int>& ds) {
  std::vector<MRow> out(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) out[i] = m_one(ds[i]);
  return out;
}

std::vector<PairClassRow> classify_pairs(
    const std::vector<std::pair<Int, Int>>& pairs) {
  std::vector<PairClassRow> out(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out[i] = classify_one(pairs[i].first, pairs[i].second);
  return out;
}

std::vector<TriquadRankRow> triquad_ranks(
    const std::vector<std::array<Int, 3>>& triples) {
  std::vector<TriquadRankRow> out(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i)
    out[i] = triquad_one(triples[i]);
  return out;
}

ConfigEnumeration residue_configs() { return enumerate_residue_configs(); }

DensityInterval density(std::uint64_t prime_bound) {
  return density_constant(prime_bound);
}

}  // namespace serial

namespace parallel {

std::vector<NormRow> unit_norms(const std::vector<Int>& ds, int threads) {
  std::vector<NormRow> out(ds.size());
  const std::int64_t n = static_cast<std::int64_t>(ds.size());
#pragma omp parallel for schedule(dynamic) num_threads(team_size(threads))
  for (std::int64_t i = 0; i < n; ++i) out[i] = norm_one(ds[i]);
  return out;
}

std::vector<MRow> m_values(const std::vector<Int>& ds, int threads) {
  std::vector<MRow> out(ds.size());
  const std::int64_t n = static_cast<std::int64_t>(ds.size());
#pragma omp parallel for schedule(dynamic) num_threads(team_size(threads))
  for (std::int64_t i = 0; i < n; ++i) out[i] = m_one(ds[i]);
  return out;
}

std::vector<PairClassRow> classify_pairs(
    const std::vector<std::pair<Int, Int>>& pairs, int threads) {
  std::vector<PairClassRow> out(pairs.size());
  const std::int64_t n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic) num_threads(team_size(threads))
  for (std::int64_t i = 0; i < n; ++i)
    out[i] = classify_one(pairs[i].first, pairs[i].second);
  return out;
}

std::vector<TriquadRankRow> triquad_ranks(
    const std::vector<std::array<Int, 3>>& triples, int threads) {
  std::vector<TriquadRankRow> out(triples.size());
  const std::int64_t n = static_cast<std::int64_t>(triples.size());
#pragma omp parallel for schedule(dynamic) num_threads(team_size(threads))
  for (std::int64_t i = 0; i < n; ++i) out[i] = triquad_one(triples[i]);
  return out;
}

ConfigEnumeration residue_configs(int threads) {
  constexpr std::int32_t total = 1 << 15;
  std::vector<std::uint8_t> forall(total, 0), unique(total, 0);
#pragma omp parallel for schedule(static) num_threads(team_size(threads))
  for (std::int32_t cfg = 0; cfg < total; ++cfg) {
    std::vector<int> upper(15);
    for (unsigned k = 0; k < 15; ++k) upper[k] = (cfg >> k & 1) ? -1 : 1;
    auto a = ResidueAssignment::from_symbols(6, upper, true);
    if (deficiency3_method_applies(a, false)) {
      forall[cfg] = 1;
      if (deficiency3_method_applies(a, true)) unique[cfg] = 1;
    }
  }
  ConfigEnumeration out;
  for (std::int32_t cfg = 0; cfg < total; ++cfg) {
    if (forall[cfg]) {
      ++out.count_forall;
      out.forall_configs.push_back(static_cast<std::uint16_t>(cfg));
    }
    if (unique[cfg]) ++out.count_unique;
  }
  return out;
}

DensityInterval density(std::uint64_t prime_bound, int threads) {
  if (prime_bound < 1000)
    throw std::domain_error("density_constant: prime_bound >= 1000 required");
  std::vector<Rat> factors = density_factors(prime_bound);
  const std::size_t nblocks = 64;
  std::vector<Rat> block(nblocks, Rat(1));
  /* rational arithmetic is exact, so any multiplication order yields the
     same canonical value as the serial product */
  const std::size_t step = (factors.size() + nblocks - 1) / nblocks;
#pragma omp parallel for schedule(dynamic) num_threads(team_size(threads))
  for (std::size_t b = 0; b < nblocks; ++b) {
    std::size_t lo = b * step;
    std::size_t hi = std::min(factors.size(), lo + step);
    if (lo < hi) block[b] = range_product(factors, lo, hi);
  }
  Rat partial(18, 25);
  for (const Rat& r : block) partial *= r;
  return density_interval_from_product(partial, prime_bound,
                                       static_cast<unsigned>(factors.size()));
}

}  // namespace parallel

}  // namespace unitsig
