#include "unitsig/report.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

#include "unitsig/mqfield.hpp"
#include "unitsig/unitgroup.hpp"

namespace unitsig::report {

std::string fnv1a64_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

json big_summary(const std::string& decimal_of_floor, const std::string& exact) {
  json o;
  o["digits"] = decimal_of_floor.size();
  o["leading"] = decimal_of_floor.substr(0, 30);
  o["fnv1a64"] = fnv1a64_hex(exact);
  return o;
}

std::string signature_string(Signature s, unsigned t) {
  std::string out(std::size_t(1) << t, '+');
  for (unsigned g = 0; g < (1u << t); ++g)
    if (s >> g & 1) out[g] = '-';
  return out;
}

std::string value_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_object() && v.contains("digits")) {
    std::ostringstream os;
    os << "[" << v["digits"].get<std::size_t>() << " digits, leading "
       << v["leading"].get<std::string>() << "..., fnv1a64 "
       << v["fnv1a64"].get<std::string>() << "]";
    return os.str();
  }
  return v.dump();
}

json subfield_table(const UnitSystem& U, const BigIntPolicy& pol) {
  json rows = json::array();
  for (const auto& rec : U.subfield) {
    json r;
    r["mask"] = rec.mask;
    r["radicand"] = rec.radicand.get_str();
    r["epsilon"] = unit_value(rec.eps, pol);
    r["norm"] = rec.eps.norm;
    if (rec.m)
      r["m"] = rec.m->m.get_str();
    else
      r["m"] = nullptr;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

json render_int(const Int& v, const BigIntPolicy& pol) {
  std::string s = v.get_str();
  if (pol.full || s.size() <= pol.threshold) return json(s);
  return big_summary(s, s);
}

json unit_value(const QuadUnit& e, const BigIntPolicy& pol) {
  std::string s = e.to_string();
  if (pol.full || s.size() <= pol.threshold) return json(s);
  /* digit count and leading digits describe the unit's integer part */
  Int a = Int(2 * e.x);
  Int b = Int(2 * e.y);
  Int z = (a + isqrt(b * b * e.d)) / 2;
  return big_summary(z.get_str(), s);
}

json unit_report(const Int& d, const BigIntPolicy& pol) {
  auto e = fundamental_unit(d);
  json j;
  j["schema"] = kSchema;
  j["command"] = "unit";
  j["d"] = d.get_str();
  j["epsilon"] = unit_value(e, pol);
  j["norm"] = e.norm;
  j["digits_of_floor"] = e.decimal_digits_of_floor();
  return j;
}

json m_report(const Int& d, const BigIntPolicy& pol) {
  auto e = fundamental_unit(d);
  json j;
  j["schema"] = kSchema;
  j["command"] = "m";
  j["d"] = d.get_str();
  j["epsilon"] = unit_value(e, pol);
  j["norm"] = e.norm;
  if (e.norm == 1) {
    auto md = m_of_unit(e);
    j["m"] = md.m.get_str();
    /* alpha = A + B*sqrt(d) with m * eps = (A - B*sqrt(d))^2 */
    std::ostringstream a, b;
    a << md.A;
    b << md.B;
    j["A"] = a.str();
    j["B"] = b.str();
  } else {
    j["m"] = nullptr;
  }
  return j;
}

json analyze_report(const std::vector<Int>& ds, const BigIntPolicy& pol) {
  auto K = make_mq_field(ds);
  auto U = saturate(K);
  auto rr = signature_rank(U);
  json j;
  j["schema"] = kSchema;
  j["command"] = "analyze";
  json rads = json::array();
  for (const Int& d : ds) rads.push_back(d.get_str());
  j["radicands"] = std::move(rads);
  j["t"] = K->t;
  j["degree"] = 1u << K->t;
  j["subfields"] = subfield_table(U, pol);
  json gens = json::array();
  for (std::size_t i = 0; i < U.gens.size(); ++i) {
    json g;
    g["name"] = "u" + std::to_string(i + 1);
    g["provenance"] = provenance_label(U.provenance[i]);
    g["signature"] = signature_string(U.gen_sigs[i], K->t);
    gens.push_back(std::move(g));
  }
  j["generators"] = std::move(gens);
  json matrix = json::array();
  for (Signature row : rr.rows) matrix.push_back(signature_string(row, K->t));
  j["signature_matrix"] = std::move(matrix);
  j["rank"] = rr.rank;
  j["deficiency"] = rr.deficiency;
  j["adjunctions"] = U.adjunctions;
  j["exact"] = rr.exact;
  if (K->t == 2) {
    auto c = classify_biquadratic(U);
    j["kuroda_case"] = c.label();
    j["kuroda_generators"] = c.generators;
  }
  return j;
}

json classify_report(const Int& d1, const Int& d2, const BigIntPolicy& pol) {
  auto K = make_mq_field({d1, d2});
  auto U = saturate(K);
  auto rr = signature_rank(U);
  auto c = classify_biquadratic(U);
  json j;
  j["schema"] = kSchema;
  j["command"] = "classify";
  j["radicands"] = json::array({d1.get_str(), d2.get_str()});
  j["subfields"] = subfield_table(U, pol);
  j["kuroda_case"] = c.label();
  j["kuroda_generators"] = c.generators;
  j["rank"] = rr.rank;
  j["deficiency"] = rr.deficiency;
  j["adjunctions"] = U.adjunctions;
  return j;
}

json possible_m_report(const ResidueAssignment& a) {
  const bool three = a.size() == 3;
  MCandidateSet c = three ? possible_m_three_primes(a) : possible_m(a);
  json j;
  j["schema"] = kSchema;
  j["command"] = "possible-m";
  j["n"] = a.size();
  j["engine"] = three ? "three-primes" : "3mod4";
  j["mode"] = a.concrete() ? "primes" : "symbols";
  if (a.concrete()) {
    json ps = json::array();
    for (const Int& p : a.primes()) ps.push_back(p.get_str());
    j["primes"] = std::move(ps);
  }
  json syms = json::array();
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned k = i + 1; k < a.size(); ++k) {
      json s;
      s["pair"] = "(q" + std::to_string(i + 1) + "/q" + std::to_string(k + 1) +
                  ")";
      s["value"] = a.symbol(i, k);
      syms.push_back(std::move(s));
    }
  j["symbols"] = std::move(syms);
  json cands = json::array();
  for (std::size_t i = 0; i < c.masks.size(); ++i) {
    json row;
    row["mask"] = c.masks[i];
    json subset = json::array();
    for (unsigned b = 0; b < a.size(); ++b)
      if (c.masks[i] >> b & 1) subset.push_back("q" + std::to_string(b + 1));
    row["subset"] = std::move(subset);
    if (a.concrete()) row["value"] = c.values[i].get_str();
    cands.push_back(std::move(row));
  }
  j["candidates"] = std::move(cands);
  return j;
}

json verdict_report(const FamilyVerdict& v) {
  json j;
  j["schema"] = kSchema;
  j["command"] = "verify";
  j["family"] = v.family;
  json ps = json::array();
  for (const Int& p : v.params) ps.push_back(p.get_str());
  j["params"] = std::move(ps);
  j["in_family"] = v.in_family;
  if (!v.in_family) j["reject_reason"] = v.reject_reason;
  json facts = json::array();
  for (const auto& f : v.facts) {
    json e;
    e["name"] = f.name;
    e["expected"] = f.expected;
    e["actual"] = f.actual;
    e["pass"] = f.pass;
    facts.push_back(std::move(e));
  }
  j["facts"] = std::move(facts);
  j["pass"] = v.pass;
  return j;
}

json search_report(const SearchResult& s) {
  json j;
  j["schema"] = kSchema;
  j["command"] = "search";
  j["header"] = s.header;
  json rows = json::array();
  for (const auto& r : s.rows) rows.push_back(r);
  j["rows"] = std::move(rows);
  j["count"] = s.rows.size();
  return j;
}

json density_report(const DensityInterval& d) {
  json j;
  j["schema"] = kSchema;
  j["command"] = "density";
  j["prime_bound"] = d.prime_bound;
  j["primes_used"] = d.primes_used;
  j["lo"] = d.lo_str;
  j["hi"] = d.hi_str;
  j["lo_double"] = d.lo;
  j["hi_double"] = d.hi;
  return j;
}

json configs_report(const ConfigEnumeration& e) {
  json j;
  j["schema"] = kSchema;
  j["command"] = "enumerate-configs";
  j["total"] = e.total;
  j["count"] = e.count_forall;
  j["count_unique_m"] = e.count_unique;
  return j;
}

json cyclotomic_report(const Int& n, const CyclotomicBound& b) {
  json j;
  j["schema"] = kSchema;
  j["command"] = "cyclotomic-bound";
  j["n"] = n.get_str();
  j["t"] = b.t;
  json ps = json::array();
  for (const Int& p : b.primes_3mod4) ps.push_back(p.get_str());
  j["primes_3mod4"] = std::move(ps);
  json ws = json::array();
  for (const Int& r : b.witness_radicands) ws.push_back(r.get_str());
  j["witness_radicands"] = std::move(ws);
  return j;
}

json claims_report(const std::vector<ClaimGroup>& groups) {
  json j;
  j["schema"] = kSchema;
  j["command"] = "verify-paper";
  json gs = json::array();
  bool all = true;
  for (const auto& g : groups) {
    json e;
    e["number"] = g.number;
    e["title"] = g.title;
    e["pass"] = g.pass;
    json cs = json::array();
    for (const auto& c : g.claims) {
      json x;
      x["id"] = c.id;
      x["statement"] = c.statement;
      if (!c.detail.empty()) x["detail"] = c.detail;
      x["pass"] = c.pass;
      cs.push_back(std::move(x));
    }
    e["claims"] = std::move(cs);
    gs.push_back(std::move(e));
    all = all && g.pass;
  }
  j["groups"] = std::move(gs);
  j["pass"] = all;
  return j;
}

std::string search_csv(const SearchResult& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.header.size(); ++i)
    os << (i ? "," : "") << s.header[i];
  os << "\n";
  for (const auto& row : s.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << row[i];
    os << "\n";
  }
  return os.str();
}

namespace {

std::string text_unit(const json& j) {
  std::ostringstream os;
  os << "epsilon(" << j["d"].get<std::string>()
     << ") = " << value_text(j["epsilon"]) << "\n";
  os << "norm = " << j["norm"].get<int>() << "\n";
  if (j.contains("m")) {
    os << "m = " << value_text(j["m"]);
    if (j["m"].is_null()) os << " (norm -1 units carry no m)";
    os << "\n";
    if (j.contains("A"))
      os << "alpha = " << j["A"].get<std::string>() << " + "
         << j["B"].get<std::string>() << "*sqrt(" << j["d"].get<std::string>()
         << "), norm(alpha) = m, conj(alpha)^2 = m*epsilon\n";
  }
  return os.str();
}

void text_subfields(std::ostringstream& os, const json& j) {
  os << "subfields:\n";
  for (const auto& r : j["subfields"]) {
    os << "  S=" << r["mask"].get<unsigned>() << "  d="
       << r["radicand"].get<std::string>() << "  norm="
       << (r["norm"].get<int>() > 0 ? "+1" : "-1") << "  m="
       << value_text(r["m"]) << "  eps=" << value_text(r["epsilon"]) << "\n";
  }
}

std::string text_analyze(const json& j) {
  std::ostringstream os;
  os << "field: Q(";
  const auto& rads = j["radicands"];
  for (std::size_t i = 0; i < rads.size(); ++i)
    os << (i ? ", " : "") << "sqrt(" << rads[i].get<std::string>() << ")";
  os << ")  degree " << j["degree"].get<unsigned>() << "\n";
  text_subfields(os, j);
  os << "generators (signature columns: embeddings g = 0.."
     << j["degree"].get<unsigned>() - 1 << "):\n";
  for (const auto& g : j["generators"])
    os << "  " << g["name"].get<std::string>() << " = "
       << g["provenance"].get<std::string>() << "  signature "
       << g["signature"].get<std::string>() << "\n";
  os << "rank " << j["rank"].get<unsigned>() << "  deficiency "
     << j["deficiency"].get<unsigned>() << "  adjunctions "
     << j["adjunctions"].get<unsigned>() << "  "
     << (j["exact"].get<bool>() ? "(exact)" : "(lower bound)") << "\n";
  if (j.contains("kuroda_case"))
    os << "kuroda case " << j["kuroda_case"].get<std::string>() << ": "
       << j["kuroda_generators"].get<std::string>() << "\n";
  return os.str();
}

std::string text_classify(const json& j) {
  std::ostringstream os;
  const auto& rads = j["radicands"];
  os << "field: Q(sqrt(" << rads[0].get<std::string>() << "), sqrt("
     << rads[1].get<std::string>() << "))\n";
  text_subfields(os, j);
  os << "kuroda case " << j["kuroda_case"].get<std::string>() << ": "
     << j["kuroda_generators"].get<std::string>() << "\n";
  os << "rank " << j["rank"].get<unsigned>() << "  deficiency "
     << j["deficiency"].get<unsigned>() << "\n";
  return os.str();
}

std::string text_possible_m(const json& j) {
  std::ostringstream os;
  os << "symbols:";
  for (const auto& s : j["symbols"])
    os << " " << s["pair"].get<std::string>() << "="
       << (s["value"].get<int>() > 0 ? "+1" : "-1");
  os << "\n";
  if (j["candidates"].empty()) {
    os << "no candidate m: a norm +1 fundamental unit is impossible\n";
    return os.str();
  }
  os << "candidate m:\n";
  for (const auto& c : j["candidates"]) {
    os << "  ";
    const auto& subset = c["subset"];
    for (std::size_t i = 0; i < subset.size(); ++i)
      os << (i ? "*" : "") << subset[i].get<std::string>();
    if (c.contains("value")) os << " = " << c["value"].get<std::string>();
    os << "\n";
  }
  return os.str();
}

std::string text_verify(const json& j) {
  std::ostringstream os;
  os << "family " << j["family"].get<std::string>() << " (";
  const auto& ps = j["params"];
  for (std::size_t i = 0; i < ps.size(); ++i)
    os << (i ? ", " : "") << ps[i].get<std::string>();
  os << ")\n";
  if (!j["in_family"].get<bool>()) {
    os << "not in family: " << j["reject_reason"].get<std::string>() << "\n";
    return os.str();
  }
  for (const auto& f : j["facts"])
    os << "  " << (f["pass"].get<bool>() ? "[ok]  " : "[FAIL]") << " "
       << f["name"].get<std::string>() << ": expected "
       << f["expected"].get<std::string>() << ", got "
       << f["actual"].get<std::string>() << "\n";
  os << (j["pass"].get<bool>() ? "verified" : "MISMATCH") << "\n";
  return os.str();
}

std::string text_search(const json& j) {
  SearchResult s;
  s.header = j["header"].get<std::vector<std::string>>();
  for (const auto& r : j["rows"])
    s.rows.push_back(r.get<std::vector<std::string>>());
  return search_csv(s);
}

std::string text_density(const json& j) {
  std::ostringstream os;
  os << "C in [" << j["lo"].get<std::string>() << ", "
     << j["hi"].get<std::string>() << "]\n";
  os << "primes used: " << j["primes_used"].get<unsigned>()
     << " (p = 1 mod 4, 5 < p <= " << j["prime_bound"].get<std::uint64_t>()
     << ")\n";
  return os.str();
}

std::string text_configs(const json& j) {
  std::ostringstream os;
  os << j["count"].get<unsigned>() << " of " << j["total"].get<unsigned>()
     << " residue configurations admit the construction\n";
  os << "(" << j["count_unique_m"].get<unsigned>()
     << " with a unique m in every block)\n";
  return os.str();
}

std::string text_cyclotomic(const json& j) {
  std::ostringstream os;
  os << "deficiency of the " << j["n"].get<std::string>()
     << "-th cyclotomic real subfield >= " << j["t"].get<unsigned>() << "\n";
  if (!j["witness_radicands"].empty()) {
    os << "witness subfield: Q(";
    const auto& ws = j["witness_radicands"];
    for (std::size_t i = 0; i < ws.size(); ++i)
      os << (i ? ", " : "") << "sqrt(" << ws[i].get<std::string>() << ")";
    os << ")\n";
  }
  return os.str();
}

std::string text_claims(const json& j) {
  std::ostringstream os;
  for (const auto& g : j["groups"]) {
    os << (g["pass"].get<bool>() ? "[PASS]" : "[FAIL]") << " "
       << g["number"].get<int>() << ". " << g["title"].get<std::string>()
       << "\n";
    for (const auto& c : g["claims"]) {
      if (c["pass"].get<bool>()) continue;
      os << "    FAILED " << c["id"].get<std::string>() << ": "
         << c["statement"].get<std::string>();
      if (c.contains("detail")) os << " [" << c["detail"].get<std::string>() << "]";
      os << "\n";
    }
  }
  os << (j["pass"].get<bool>() ? "all groups passed" : "FAILURES present")
     << "\n";
  return os.str();
}

}  // namespace

std::string render_text(const json& j) {
  const std::string cmd = j.at("command").get<std::string>();
  std::string out;
  if (cmd == "unit" || cmd == "m")
    out = text_unit(j);
  else if (cmd == "analyze")
    out = text_analyze(j);
  else if (cmd == "classify")
    out = text_classify(j);
  else if (cmd == "possible-m")
    out = text_possible_m(j);
  else if (cmd == "verify")
    out = text_verify(j);
  else if (cmd == "search")
    out = text_search(j);
  else if (cmd == "density")
    out = text_density(j);
  else if (cmd == "enumerate-configs")
    out = text_configs(j);
  else if (cmd == "cyclotomic-bound")
    out = text_cyclotomic(j);
  else if (cmd == "verify-paper")
    out = text_claims(j);
  else
    out = j.dump(2) + "\n";
  if (j.contains("elapsed_seconds")) {
    std::ostringstream os;
    os << "elapsed: " << j["elapsed_seconds"].get<double>() << "s\n";
    out += os.str();
  }
  return out;
}

}  // namespace unitsig::report
