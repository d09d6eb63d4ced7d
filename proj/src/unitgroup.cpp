#include "unitsig/unitgroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "unitsig/arith.hpp"
#include "unitsig/gf2.hpp"

namespace unitsig {

namespace {

/* exponent vectors stay dyadic; u^(2^(t-1)) lands in the subfield-unit
   group, so denominators divide 2^(t-1) */
bool is_dyadic(const Rat& p, unsigned t) {
  Int den = p.get_den();
  Int cap = Int(1) << (t - 1);
  return mpz_divisible_p(cap.get_mpz_t(), den.get_mpz_t()) != 0;
}

}  // namespace

std::vector<SubfieldUnitRecord> subfield_units(
    const std::shared_ptr<const MQField>& K) {
  std::vector<SubfieldUnitRecord> out;
  out.reserve(K->n() - 1);
  for (Subset S = 1; S < K->n(); ++S) {
    SubfieldUnitRecord rec;
    rec.mask = S;
    rec.radicand = K->basis_radicand[S];
    rec.eps = fundamental_unit(rec.radicand);
    if (rec.eps.norm == 1) rec.m = m_of_unit(rec.eps);
    out.push_back(std::move(rec));
  }
  return out;
}

bool kubota_square_class(const MQField& K,
                         const std::vector<SubfieldUnitRecord>& records,
                         const std::vector<int>& exponents) {
  if (records.size() != K.n() - 1 || exponents.size() != records.size())
    throw std::invalid_argument("kubota_square_class: size mismatch");
  Int m_product(1);
  for (std::size_t i = 0; i < records.size(); ++i) {
    int n = exponents[i] & 1;
    if (n == 0) continue;
    if (!records[i].m)
      throw std::domain_error(
          "kubota_square_class: odd exponent on a norm -1 unit");
    m_product *= records[i].m->m;
  }
  Int cls = squarefree_part(m_product).squarefree;
  for (Subset T = 0; T < K.n(); ++T)
    if (cls == K.basis_radicand[T]) return true;
  return false;
}

UnitSystem saturate(std::shared_ptr<const MQField> K) {
  UnitSystem U;
  U.K = K;
  U.subfield = subfield_units(K);
  U.complete = K->t <= 3;

  const unsigned count = K->n() - 1;
  for (unsigned i = 0; i < count; ++i) {
    const auto& rec = U.subfield[i];
    U.gens.push_back(embed_unit(K, rec.mask, rec.eps));
    std::vector<Rat> p(count, Rat(0));
    p[i] = 1;
    U.provenance.push_back(std::move(p));
    U.gen_sigs.push_back(signature(U.gens.back()));
  }

  const Signature all_ones = (Signature(1) << K->n()) - 1;
  const std::uint64_t scan_end = std::uint64_t(1) << count;
  unsigned safety = 0;

  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint64_t e = 1; e < scan_end && !changed; ++e) {
      Signature sig = 0;
      for (unsigned i = 0; i < count; ++i)
        if (e & (std::uint64_t(1) << i)) sig ^= U.gen_sigs[i];
      int flip;
      if (sig == 0)
        flip = 1;
      else if (sig == all_ones)
        flip = -1;
      else
        continue;

      std::vector<Rat> p(count, Rat(0));
      for (unsigned i = 0; i < count; ++i)
        if (e & (std::uint64_t(1) << i))
          for (unsigned s = 0; s < count; ++s) p[s] += U.provenance[i][s];

      bool integral = true;
      for (const Rat& c : p) integral = integral && is_integer(c);

      /* when the exponent pattern reduces to an integral vector over the
       * subfield units with odd part on norm +1 units only, the m-classes
       * decide squareness without building the product */
      bool known = false, square = false;
      if (integral) {
        std::vector<int> n_mod2(count, 0);
        bool odd_on_minus1 = false, any_odd = false;
        for (unsigned s = 0; s < count; ++s) {
          Int num = p[s].get_num();
          n_mod2[s] = mpz_odd_p(num.get_mpz_t()) ? 1 : 0;
          if (n_mod2[s]) {
            any_odd = true;
            if (!U.subfield[s].m) odd_on_minus1 = true;
          }
        }
        if (!any_odd) {
          known = true;
          square = true;
        } else if (!odd_on_minus1) {
          known = true;
          square = kubota_square_class(*K, U.subfield, n_mod2);
        }
      }
      if (known && !square) continue;

      MQElement u = mq_rational(K, Rat(flip));
      for (unsigned i = 0; i < count; ++i)
        if (e & (std::uint64_t(1) << i)) u = u * U.gens[i];
      auto root = is_square(u);
      if (known && square && !root)
        throw std::logic_error("saturate: m-class criterion disagrees");
      if (!root) continue;

      unsigned lowest = 0;
      while (!(e & (std::uint64_t(1) << lowest))) ++lowest;
      for (Rat& c : p) c /= 2;
      U.gens[lowest] = *root;
      U.provenance[lowest] = p;
      U.gen_sigs[lowest] = signature(*root);
      ++U.adjunctions;
      if (++safety > 200) throw std::logic_error("saturate: no fixpoint");
      changed = true;
    }
  }

  for (const auto& p : U.provenance)
    for (const Rat& c : p)
      if (!is_dyadic(c, K->t))
        throw std::logic_error("saturate: provenance not dyadic");
  return U;
}

RankReport signature_rank(const UnitSystem& U) {
  RankReport r;
  r.rows.push_back((Signature(1) << U.K->n()) - 1);
  for (Signature s : U.gen_sigs) r.rows.push_back(s);
  r.rank = gf2_rank(r.rows);
  r.deficiency = U.K->n() - r.rank;
  r.exact = U.complete;
  return r;
}

std::vector<std::uint32_t> provenance_half_masks(const UnitSystem& U) {
  std::vector<std::uint32_t> out;
  for (const auto& p : U.provenance) {
    std::uint32_t mask = 0;
    for (std::size_t s = 0; s < p.size(); ++s)
      if (p[s].get_den() == 2) mask |= std::uint32_t(1) << s;
    out.push_back(mask);
  }
  return out;
}

std::string provenance_label(const std::vector<Rat>& p) {
  std::vector<std::string> outer;
  std::vector<Rat> frac(p.size(), Rat(0));
  bool any_frac = false;
  for (std::size_t s = 0; s < p.size(); ++s) {
    Rat c = p[s];
    if (c == 0) continue;
    Int k(c.get_num() / c.get_den()); /* floor for nonnegative dyadic */
    std::string name = "e" + std::to_string(s + 1);
    if (k == 1)
      outer.push_back(name);
    else if (k > 1)
      outer.push_back(name + "^" + k.get_str());
    frac[s] = c - Rat(k);
    if (frac[s] != 0) any_frac = true;
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (i) out << "*";
    out << outer[i];
  }
  if (any_frac) {
    /* e^(q+f) named as e^q * sqrt(e^(2f)); recursion halves denominators */
    for (Rat& c : frac) c *= 2;
    if (!outer.empty()) out << "*";
    out << "sqrt(" << provenance_label(frac) << ")";
  }
  if (outer.empty() && !any_frac) out << "1";
  return out.str();
}

BiquadClass classify_biquadratic(const UnitSystem& U) {
  if (U.K->t != 2)
    throw std::invalid_argument("classify_biquadratic: rank 2 required");
  BiquadClass c;
  {
    std::vector<std::string> names;
    for (const auto& p : U.provenance) names.push_back(provenance_label(p));
    std::ostringstream g;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) g << ", ";
      g << names[i];
    }
    c.generators = g.str();
  }

  bool all_minus1 = true;
  for (const auto& rec : U.subfield) all_minus1 = all_minus1 && !rec.m;

  std::vector<std::uint64_t> halves;
  for (std::uint32_t m : provenance_half_masks(U))
    if (m) halves.push_back(m);
  std::vector<std::uint64_t> span = gf2_span(halves);
  std::vector<int> weights;
  for (std::uint64_t v : span)
    if (v) weights.push_back(static_cast<int>(std::popcount(v)));
  std::sort(weights.begin(), weights.end());

  if (all_minus1) {
    c.family = 'c';
    if (weights.empty())
      c.number = 1;
    else if (weights == std::vector<int>{3})
      c.number = 2;
    else
      throw std::logic_error("classify_biquadratic: impossible c-pattern");
    unsigned rank = signature_rank(U).rank;
    if ((c.number == 2) != (rank == 4))
      throw std::logic_error("classify_biquadratic: rank/case mismatch");
    return c;
  }

  c.family = 'b';
  if (weights.empty())
    c.number = 1;
  else if (weights == std::vector<int>{1})
    c.number = 2;
  else if (weights == std::vector<int>{1, 1, 2})
    c.number = 3;
  else if (weights == std::vector<int>{2})
    c.number = 4;
  else if (weights == std::vector<int>{1, 2, 3})
    c.number = 5;
  else if (weights == std::vector<int>{2, 2, 2})
    c.number = 6;
  else if (weights == std::vector<int>{3})
    c.number = 7;
  else
    throw std::logic_error("classify_biquadratic: impossible b-pattern");
  return c;
}

unsigned subfield_signature_rank(const MQField& K,
                                 const std::vector<SubfieldUnitRecord>& recs) {
  std::vector<Signature> rows;
  rows.push_back((Signature(1) << K.n()) - 1);
  auto shared = std::make_shared<MQField>(K);
  for (const auto& rec : recs)
    rows.push_back(signature(embed_unit(shared, rec.mask, rec.eps)));
  return gf2_rank(rows);
}

unsigned subfield_signature_rank(const std::shared_ptr<const MQField>& K) {
  std::vector<Signature> rows;
  rows.push_back((Signature(1) << K->n()) - 1);
  for (const auto& rec : subfield_units(K))
    rows.push_back(signature(embed_unit(K, rec.mask, rec.eps)));
  return gf2_rank(rows);
}

unsigned tp_independent_lower_bound(const MQField& K,
                                    const std::vector<Int>& m_values) {
  std::map<Int, unsigned> coord;
  auto coordinates = [&](const Int& v) {
    std::uint64_t row = 0;
    for (const auto& [p, e] : factorize(abs(v)).primes) {
      if ((e & 1u) == 0) continue;
      auto [it, fresh] = coord.emplace(p, coord.size());
      if (it->second >= 64)
        throw std::domain_error("tp_independent_lower_bound: too many primes");
      row |= std::uint64_t(1) << it->second;
    }
    return row;
  };
  std::vector<std::uint64_t> r_rows;
  for (Subset S = 1; S < K.n(); ++S)
    r_rows.push_back(coordinates(K.basis_radicand[S]));
  std::vector<std::uint64_t> all_rows = r_rows;
  for (const Int& m : m_values) all_rows.push_back(coordinates(m));
  return gf2_rank(all_rows) - gf2_rank(r_rows);
}

unsigned tp_independent_lower_bound(const std::shared_ptr<const MQField>& K) {
  std::vector<Int> ms;
  for (const auto& rec : subfield_units(K))
    if (rec.m) ms.push_back(rec.m->m);
  return tp_independent_lower_bound(*K, ms);
}

}  // namespace unitsig
