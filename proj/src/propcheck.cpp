#include "normforge/propcheck.hpp"

#include <algorithm>
#include <memory>

#include "normforge/coloring.hpp"
#include "normforge/errors.hpp"
#include "normforge/exclusion.hpp"
#include "normforge/hall.hpp"
#include "normforge/parallel.hpp"
#include "normforge/subset_norm.hpp"
#include "suites.hpp"

namespace normforge {

namespace {

Json findings_json(const std::vector<Finding>& fs) {
  Json arr = Json::array();
  for (const auto& f : fs) arr.push_back(Json{{"claim", f.claim}, {"payload", f.payload}});
  return arr;
}

std::string params_text(const Json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) {
    if (!s.empty()) s += ";";
    s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

void keep_first(std::vector<Finding>& fs) {
  std::stable_sort(fs.begin(), fs.end(), [](const Finding& a, const Finding& b) { return a.order < b.order; });
  if (fs.size() > kFindingsKept) fs.resize(kFindingsKept);
}

}  // namespace

Json Report::to_json() const {
  Json j;
  j["suite"] = suite;
  j["params"] = params;
  j["seed"] = seed;
  j["cases"] = cases;
  j["violations"] = findings_json(violations);
  j["discrepancies"] = findings_json(discrepancies);
  j["violation_count"] = violation_count;
  j["discrepancy_count"] = discrepancy_count;
  j["budget_exceeded"] = budget_exceeded;
  return j;
}

std::string Report::csv_header() { return "suite,seed,cases,violations,discrepancies,budget_exceeded,params"; }

std::string Report::csv_row() const {
  return suite + "," + std::to_string(seed) + "," + std::to_string(cases) + "," + std::to_string(violation_count) + "," +
         std::to_string(discrepancy_count) + "," + (budget_exceeded ? "true" : "false") + "," + params_text(params);
}

void CaseOutcome::violation(std::string claim, Json payload, std::vector<std::uint64_t> order) {
  ++violation_count;
  if (violations.size() < kFindingsKept) violations.push_back({std::move(claim), std::move(payload), std::move(order)});
}

void CaseOutcome::discrepancy(std::string claim, Json payload, std::vector<std::uint64_t> order) {
  ++discrepancy_count;
  if (discrepancies.size() < kFindingsKept) discrepancies.push_back({std::move(claim), std::move(payload), std::move(order)});
}

Report run_cases(const SuiteSpec& spec, Json params, std::uint64_t count,
                 const std::function<void(std::uint64_t, CaseOutcome&)>& body) {
  Report r;
  r.suite = spec.name;
  r.params = std::move(params);
  r.seed = spec.seed;
  if (spec.budget && count > spec.budget) {
    count = spec.budget;
    r.budget_exceeded = true;
  }
  std::vector<CaseOutcome> outcomes(count);
  parallel_for(count, spec.jobs, [&](std::uint64_t i) {
    try {
      body(i, outcomes[i]);
    } catch (const BudgetError&) {
      outcomes[i].budget_exceeded = true;
    }
  });
  r.cases = count;
  for (std::uint64_t i = 0; i < count; ++i) {
    auto& o = outcomes[i];
    r.violation_count += o.violation_count;
    r.discrepancy_count += o.discrepancy_count;
    r.budget_exceeded = r.budget_exceeded || o.budget_exceeded;
    for (auto& f : o.violations) {
      if (f.order.empty()) f.order.push_back(i);
      r.violations.push_back(std::move(f));
    }
    for (auto& f : o.discrepancies) {
      if (f.order.empty()) f.order.push_back(i);
      r.discrepancies.push_back(std::move(f));
    }
  }
  keep_first(r.violations);
  keep_first(r.discrepancies);
  return r;
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> registry = [] {
    std::vector<SuiteInfo> out;
    detail::add_core_suites(out);
    detail::add_coloring_suites(out);
    detail::add_hall_suites(out);
    return out;
  }();
  return registry;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return &s;
  return nullptr;
}

Report run_suite(const SuiteSpec& spec) {
  const SuiteInfo* s = find_suite(spec.name);
  if (!s) throw UsageError("unknown suite '" + spec.name + "'");
  return s->run(spec);
}

namespace {

// Calls visit(index_mask) for every size-s subset of m items, in increasing
// numeric order, until visit returns true.
template <class Visit>
bool scan_size(unsigned m, unsigned s, Visit&& visit) {
  if (s > m) return false;
  if (s == 0) return visit(std::uint64_t{0});
  const std::uint64_t last = ((std::uint64_t{1} << s) - 1) << (m - s);
  for (std::uint64_t x = (std::uint64_t{1} << s) - 1;; x = next_same_popcount(x)) {
    if (visit(x)) return true;
    if (x == last) return false;
  }
}

template <class Elem>
std::vector<Elem> pick(const std::vector<Elem>& ground, std::uint64_t idx) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (idx >> i & 1) out.push_back(ground[i]);
  return out;
}

std::int64_t need(const std::map<std::string, std::int64_t>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw UsageError("missing parameter '" + key + "'");
  return it->second;
}

}  // namespace

ExtremalResult exhaustive_extremal(NormId id, const std::map<std::string, std::int64_t>& params, Objective objective,
                                   unsigned target, std::uint64_t budget) {
  unsigned m = 0;
  std::function<unsigned(std::uint64_t)> norm_of;
  std::function<Json(std::uint64_t)> witness_of;
  std::vector<Mask> ground;

  switch (id) {
    case NormId::counting:
      throw UsageError("the counting norm has no extremal problem beyond |A|");
    case NormId::exclusion:
      throw UsageError("exclusion norm values are rational; extremal search supports norms 2-4");
    case NormId::subset: {
      const SubsetNormParams p(static_cast<unsigned>(need(params, "n")), static_cast<unsigned>(need(params, "G")));
      auto table = std::make_shared<SubsetNormTable>(p);
      m = static_cast<unsigned>(table->universe_size());
      norm_of = [table](std::uint64_t idx) { return table->norm(static_cast<std::uint32_t>(idx)); };
      witness_of = [table](std::uint64_t idx) { return detail::family_json(table->family(static_cast<std::uint32_t>(idx))); };
      break;
    }
    case NormId::coloring: {
      const auto N = static_cast<unsigned>(need(params, "N"));
      if (N < 2 || N > 5) throw BudgetError("norm3 extremal search supports 2 <= N <= 5");
      for (Mask a = 0; a <= full_mask(N); ++a)
        if (popcount(a) >= 2) ground.push_back(a);
      m = static_cast<unsigned>(ground.size());
      norm_of = [N, &ground](std::uint64_t idx) { return norm3(PolygonFamily(N, pick(ground, idx))).norm; };
      witness_of = [N, &ground](std::uint64_t idx) { return detail::family_json(Family(N, pick(ground, idx))); };
      break;
    }
    case NormId::hall: {
      const auto N = static_cast<unsigned>(need(params, "N"));
      if (N < 1 || N > 4) throw BudgetError("norm4 extremal search supports 1 <= N <= 4");
      m = 1u << N;
      norm_of = [N](std::uint64_t idx) { return hall_norm4(FnSet::from_index_bits(N, idx)); };
      witness_of = [N](std::uint64_t idx) { return detail::fnset_json(FnSet::from_index_bits(N, idx)); };
      break;
    }
  }
  if (m > 30) throw BudgetError("extremal search ground set too large");

  ExtremalResult res;
  auto check = [&](std::uint64_t idx) {
    if (++res.families_examined > budget) throw BudgetError("extremal search exceeded budget " + std::to_string(budget));
    const unsigned v = norm_of(idx);
    const bool ok = objective == Objective::min_size_at_norm ? v >= target : v <= target;
    if (ok) {
      res.value = BigCount(static_cast<std::uint64_t>(std::popcount(idx)));
      res.witness = witness_of(idx);
    }
    return ok;
  };
  if (objective == Objective::min_size_at_norm) {
    for (unsigned s = 0; s <= m; ++s)
      if (scan_size(m, s, check)) break;
  } else {
    for (unsigned s = m + 1; s-- > 0;)
      if (scan_size(m, s, check)) break;
  }
  return res;
}

}  // namespace normforge
