#include <map>

#include "normforge/errors.hpp"
#include "normforge/propcheck.hpp"

namespace normforge {

namespace {

struct CatalogEntry {
  std::string claim;
  SuiteSpec spec;
  std::string replay;
  std::string note;
};

const std::map<std::string, CatalogEntry>& catalog_entries() {
  static const std::map<std::string, CatalogEntry> entries = [] {
    std::map<std::string, CatalogEntry> m;
    auto add = [&](std::string id, std::string claim, std::string suite, std::map<std::string, std::int64_t> params,
                   std::uint64_t cases, std::string replay, std::string note) {
      SuiteSpec s;
      s.name = std::move(suite);
      s.params = std::move(params);
      s.cases = cases;
      m.emplace(std::move(id), CatalogEntry{std::move(claim), std::move(s), std::move(replay), std::move(note)});
    };
    add("union-bound-direction", "j >= F/Q for the exclusion norm of a union", "norm1.union_bound", {{"G", 5}}, 0,
        "normforge verify --suite norm1.union_bound --G 5", "the inequality forced by |A u B| <= |A|+|B| is j <= F/Q");
    add("kgon-formula", "the k-gons of N are split by min(ceil(N/(k-1)), floor(N/k)+1) parts", "coloring.kgon", {{"N", 7}}, 0,
        "normforge kgon --N 4 --k 2", "the exact count is ceil(N/(k-1))");
    add("pstar-claim", "P(sigma) lies in no p of P*(A) for sigma in Delta(A)", "bridges.pstar_scan", {{"N", 2}}, 0,
        "normforge bridge pstar-scan --N 2", "fails when P(sigma) is empty");
    add("norm4-singleton", "norm4 is a norm", "hall.axioms", {{"N", 2}}, 0, "normforge verify --suite hall.axioms --N 2",
        "monotone and positive hold; a singleton has norm4 2");
    add("cut-empty-side", "both cut sides keep at least half of norm4", "hall.cut", {{"N", 6}}, 200, "normforge verify --suite hall.cut --N 6",
        "fails when L or R is empty");
    add("empty-R-cone", "the cone over rho attains HN(L) = HN(delta) - N/2", "hall.empty_R", {{"N", 4}}, 1,
        "normforge verify --suite hall.empty_R --N 4", "equality needs rho total");
    add("pplus-statements", "the P+ bounds (ii), (iii) and the member-size corollary", "bridges.pplus_bounds", {{"N", 3}, {"max_members", 8}}, 1,
        "normforge bridge pplus --functions <file>", "(ii) fails at k+1 = N/2, (iii) for |p| <= 1, the corollary already at N = 3");
    return m;
  }();
  return entries;
}

}  // namespace

std::vector<std::string> default_discrepancy_catalog() {
  std::vector<std::string> ids;
  for (const auto& [id, e] : catalog_entries()) ids.push_back(id);
  return ids;
}

Report discrepancy_report(const std::vector<std::string>& catalog) {
  Report r;
  r.suite = "report";
  r.seed = 1;
  for (const std::string& id : catalog) {
    auto it = catalog_entries().find(id);
    if (it == catalog_entries().end()) throw UsageError("unknown discrepancy id: " + id);
    const CatalogEntry& e = it->second;
    const Report sub = run_suite(e.spec);
    ++r.cases;
    Json payload{{"id", id}, {"suite", e.spec.name}, {"replay", e.replay}, {"observed", sub.discrepancy_count > 0},
                 {"occurrences", sub.discrepancy_count}, {"note", e.note}};
    if (!sub.discrepancies.empty()) payload["example"] = sub.discrepancies.front().payload;
    r.discrepancies.push_back({e.claim, std::move(payload), {r.cases}});
    ++r.discrepancy_count;
    for (const Finding& v : sub.violations) {
      ++r.violation_count;
      if (r.violations.size() < kFindingsKept) r.violations.push_back(v);
    }
    r.budget_exceeded = r.budget_exceeded || sub.budget_exceeded;
  }
  return r;
}

}  // namespace normforge
