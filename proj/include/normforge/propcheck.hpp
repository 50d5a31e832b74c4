#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "normforge/axioms.hpp"
#include "normforge/combinatorics.hpp"

namespace normforge {

using Json = nlohmann::ordered_json;

// A single failed check. `order` ranks counterexamples: family size first,
// then canonical order, so the first recorded finding is the minimal one.
struct Finding {
  std::string claim;
  Json payload;
  std::vector<std::uint64_t> order;
};

inline constexpr std::size_t kFindingsKept = 8;

struct Report {
  std::string suite;
  Json params = Json::object();
  std::uint64_t seed = 0;
  std::uint64_t cases = 0;
  std::uint64_t violation_count = 0;
  std::uint64_t discrepancy_count = 0;
  std::vector<Finding> violations;     // hard invariants that failed
  std::vector<Finding> discrepancies;  // stated claims that do not hold as written
  bool budget_exceeded = false;

  bool passed() const { return violation_count == 0; }
  Json to_json() const;
  static std::string csv_header();
  std::string csv_row() const;
};

struct SuiteSpec {
  std::string name;
  std::map<std::string, std::int64_t> params;
  std::uint64_t seed = 1;
  std::uint64_t cases = 0;   // 0 picks the suite default
  std::uint64_t budget = 0;  // case cap; 0 means none
  unsigned jobs = 1;

  std::int64_t param(const std::string& key, std::int64_t fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

using SuiteFn = std::function<Report(const SuiteSpec&)>;

struct SuiteInfo {
  std::string name;
  std::string statement;  // the property checked
  SuiteFn run;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& name);
// Throws UsageError for an unknown name.
Report run_suite(const SuiteSpec& spec);

// Per-case outcome collected by run_cases.
struct CaseOutcome {
  std::vector<Finding> violations;
  std::vector<Finding> discrepancies;
  std::uint64_t violation_count = 0;
  std::uint64_t discrepancy_count = 0;
  bool budget_exceeded = false;

  void violation(std::string claim, Json payload, std::vector<std::uint64_t> order = {});
  void discrepancy(std::string claim, Json payload, std::vector<std::uint64_t> order = {});
};

// Runs `count` cases (capped by spec.budget) through `body` on spec.jobs
// workers and merges the outcomes in case order. BudgetError inside a case
// marks the report as over budget.
Report run_cases(const SuiteSpec& spec, Json params, std::uint64_t count,
                 const std::function<void(std::uint64_t, CaseOutcome&)>& body);

enum class Objective { min_size_at_norm, max_size_at_norm };

struct ExtremalResult {
  std::optional<BigCount> value;  // empty when no family qualifies
  Json witness;
  std::uint64_t families_examined = 0;
};

// Exact optimum of |A| over families with norm >= target (min) or <= target
// (max), by enumeration in size order. Params: norm1 {F,G}; norm2 {n,G};
// norm3 {N}; norm4 {N}.
ExtremalResult exhaustive_extremal(NormId id, const std::map<std::string, std::int64_t>& params, Objective objective,
                                   unsigned target, std::uint64_t budget = 1ull << 24);

// Stated claims that computation contradicts, with live payloads.
std::vector<std::string> default_discrepancy_catalog();
Report discrepancy_report(const std::vector<std::string>& catalog);

}  // namespace normforge
