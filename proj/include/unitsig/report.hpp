#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "unitsig/families.hpp"
#include "unitsig/integer.hpp"
#include "unitsig/quadfield.hpp"
#include "unitsig/verify_suite.hpp"

namespace unitsig::report {

/* insertion-ordered keys keep every dump byte-reproducible */
using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "unitsig/1";

/* Integers above the threshold are summarized as digit count, leading
 * digits, and a content hash instead of the full decimal expansion. */
struct BigIntPolicy {
  bool full = false;
  std::size_t threshold = 10000;
};

std::string fnv1a64_hex(const std::string& s);

/* Decimal string, or {"digits", "leading", "fnv1a64"} summary over the
 * policy threshold. */
json render_int(const Int& v, const BigIntPolicy& pol);

/* "x + y*sqrt(d)" string, or a summary object keyed by the digit count of
 * the unit's integer part. */
json unit_value(const QuadUnit& e, const BigIntPolicy& pol);

json unit_report(const Int& d, const BigIntPolicy& pol);
json m_report(const Int& d, const BigIntPolicy& pol);
json analyze_report(const std::vector<Int>& ds, const BigIntPolicy& pol);
json classify_report(const Int& d1, const Int& d2, const BigIntPolicy& pol);
json possible_m_report(const ResidueAssignment& a);
json verdict_report(const FamilyVerdict& v);
json search_report(const SearchResult& s);
json density_report(const DensityInterval& d);
json configs_report(const ConfigEnumeration& e);
json cyclotomic_report(const Int& n, const CyclotomicBound& b);
json claims_report(const std::vector<ClaimGroup>& groups);

/* one tuple per line, header row first */
std::string search_csv(const SearchResult& s);

/* Human-readable rendering of any report produced above. */
std::string render_text(const json& j);

}  // namespace unitsig::report
