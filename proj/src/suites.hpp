#pragma once

#include <vector>

#include "normforge/hall.hpp"
#include "normforge/propcheck.hpp"
#include "normforge/rng.hpp"
#include "normforge/setcore.hpp"

namespace normforge::detail {

void add_core_suites(std::vector<SuiteInfo>& out);
void add_coloring_suites(std::vector<SuiteInfo>& out);
void add_hall_suites(std::vector<SuiteInfo>& out);

inline Json mask_json(Mask m) { return Json::parse(emit_mask(m)); }
inline Json family_json(const Family& A) { return Json::parse(emit_sets(A)); }
inline Json fnset_json(const FnSet& A) { return Json::parse(emit_function_list(A)); }
inline Json pfn_json(const PartialFn& s) { return Json::parse(emit_pfn(s)); }
inline Json fnfamily_json(const FnFamily& d) { return Json::parse(emit_pfn_list(d)); }
inline Json ratio_json(const ExactRatio& r) { return r.str(); }

// Parameters echoed into a report.
inline Json params_json(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
  Json j = Json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

// Random families and function sets for seeded suites.
Family random_family(CaseRng& rng, unsigned N, unsigned min_size, unsigned max_member_count);
FnSet random_fnset(CaseRng& rng, unsigned N);
FnFamily random_fnfamily(CaseRng& rng, unsigned N, unsigned max_members);

}  // namespace normforge::detail
