#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "normforge/bridges.hpp"
#include "normforge/coloring.hpp"
#include "normforge/errors.hpp"
#include "normforge/exclusion.hpp"
#include "normforge/hall.hpp"
#include "normforge/propcheck.hpp"
#include "normforge/subset_norm.hpp"

namespace normforge::cli {

namespace {

struct Globals {
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
};

// Literal JSON text, or the contents of a file.
std::string read_input(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw UsageError("cannot read " + arg);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Mask parse_set(const std::string& text, unsigned G) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON", "byte " + std::to_string(e.byte));
  }
  if (!j.is_array()) throw ParseError("expected an array of elements", "/");
  Mask m = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& v = j[i];
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= G)
      throw ParseError("element must be an integer in 0.." + std::to_string(G - 1), "/" + std::to_string(i));
    const Mask b = bit(v.get<unsigned>());
    if (m & b) throw ParseError("duplicate element", "/" + std::to_string(i));
    m |= b;
  }
  return m;
}

Json parts_json(const Partition& p) {
  Json arr = Json::array();
  for (Mask part : p.parts()) arr.push_back(Json::parse(emit_mask(part)));
  return arr;
}

Json pfns_json(const FnFamily& d) { return Json::parse(emit_pfn_list(d)); }

int emit(std::ostream& out, const Json& j) {
  out << j.dump() << "\n";
  return kOk;
}

// Violations outrank budget exhaustion.
int combined_exit(const std::vector<Report>& reports) {
  int code = kOk;
  for (const auto& r : reports) {
    if (!r.passed()) return kFound;
    if (r.budget_exceeded) code = kBudget;
  }
  return code;
}

void emit_reports(std::ostream& out, const Globals& g, const std::vector<Report>& reports) {
  if (g.format == "csv") {
    out << Report::csv_header() << "\n";
    for (const auto& r : reports) out << r.csv_row() << "\n";
    return;
  }
  if (reports.size() == 1) {
    out << reports.front().to_json().dump() << "\n";
    return;
  }
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  out << arr.dump() << "\n";
}

// "--key value" pairs left over after option parsing, as integers.
std::map<std::string, std::int64_t> extra_params(const std::vector<std::string>& rest) {
  std::map<std::string, std::int64_t> m;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::string key = rest[i], value;
    if (key.rfind("--", 0) != 0) throw UsageError("unexpected argument " + key);
    key = key.substr(2);
    if (auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= rest.size()) throw UsageError("missing value for --" + key);
      value = rest[++i];
    }
    try {
      std::size_t used = 0;
      m[key] = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw UsageError("suite parameter --" + key + " needs an integer, got " + value);
    }
  }
  return m;
}

// lo..hi or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("bad range " + text);
  }
}

// Global flags may follow the subcommand; move them in front of it so that
// suite parameters can pass through verify untouched.
std::vector<std::string> hoist_globals(const std::vector<std::string>& args) {
  static const std::vector<std::string> globals{"--format", "--jobs", "--seed", "--budget"};
  std::vector<std::string> front, rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const std::string key = a.substr(0, a.find('='));
    if (std::find(globals.begin(), globals.end(), key) == globals.end()) {
      rest.push_back(a);
      continue;
    }
    front.push_back(a);
    if (key == a && i + 1 < args.size()) front.push_back(args[++i]);
  }
  front.insert(front.end(), rest.begin(), rest.end());
  return front;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact set-norm computations and verification suites", "normforge"};
  app.require_subcommand(1);

  Globals g;
  if (const char* env = std::getenv("NORMFORGE_BUDGET")) {
    try {
      g.budget = std::stoull(env);
    } catch (const std::logic_error&) {
      err << "error: NORMFORGE_BUDGET must be a nonnegative integer\n";
      return kUsage;
    }
  }
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Seed for random suites");
  app.add_option("--budget", g.budget, "Case or search budget (0 = none)");

  std::function<int()> action;
  std::string family, functions, pfns, set_arg, suite;
  unsigned F = 0, G = 0, n = 0, N = 0, k = 0;
  std::uint64_t cases = 0;
  bool witness = false, oracle_check = false, all = false;
  std::vector<std::string> grid;

  auto* c0 = app.add_subcommand("norm0", "Counting norm of a family");
  c0->add_option("--family", family, "Family JSON file")->required();
  c0->callback([&] {
    action = [&] {
      const Family A = parse_family(read_input(family));
      return emit(out, Json{{"norm", A.size()}});
    };
  });

  auto* c1 = app.add_subcommand("norm1", "Exclusion norm of a set");
  c1->add_option("--F", F)->required();
  c1->add_option("--G", G)->required();
  c1->add_option("--set", set_arg, "JSON array or file")->required();
  c1->callback([&] {
    action = [&] {
      const ExclusionParams p(F, G);
      const Mask A = parse_set(read_input(set_arg), G);
      const ExactRatio v = norm1(p, A);
      return emit(out, Json{{"norm", v.str()}, {"size", popcount(A)}});
    };
  });

  auto* c2 = app.add_subcommand("norm2", "Subset norm of a family of H-subsets");
  c2->add_option("--n", n)->required();
  c2->add_option("--G", G)->required();
  c2->add_option("--family", family)->required();
  c2->add_flag("--witness", witness, "Attach the uncovered set");
  c2->callback([&] {
    action = [&] {
      const SubsetNormParams p(n, G);
      const Family A = parse_family(read_input(family));
      if (A.universe() != G) throw UsageError("family universe must equal G");
      const Norm2Result r = norm2(p, A);
      Json j{{"norm", r.k}};
      if (witness) j["witness"] = Json::parse(emit_mask(r.witness));
      return emit(out, j);
    };
  });

  auto* c3 = app.add_subcommand("norm3", "Graph-coloring norm of a polygon family");
  c3->add_option("--family", family)->required();
  c3->add_flag("--witness", witness, "Attach a splitting partition");
  c3->add_flag("--oracle-check", oracle_check, "Compare with the recursive definition");
  c3->callback([&] {
    action = [&] {
      const PolygonFamily A(parse_family(read_input(family)));
      const Norm3Result r = norm3(A);
      Json j{{"norm", r.norm}};
      if (witness) j["partition"] = parts_json(r.witness.partition);
      if (oracle_check) {
        const unsigned o = norm3_by_oracle(A);
        j["oracle"] = o;
        j["oracle_agrees"] = o == r.norm;
        emit(out, j);
        return o == r.norm ? kOk : kFound;
      }
      return emit(out, j);
    };
  });

  auto* c4 = app.add_subcommand("norm4", "Hall norm of a set of functions");
  c4->add_option("--functions", functions)->required();
  c4->add_flag("--witness", witness, "Attach the refined family");
  c4->callback([&] {
    action = [&] {
      const FnSet A = parse_fnset(read_input(functions));
      const HallResult r = hall_norm_HN(delta(A));
      Json j{{"norm", r.value}};
      if (witness) j["witness"] = Json{{"k", r.witness.k}, {"refined", pfns_json(r.witness.refined)}};
      return emit(out, j);
    };
  });

  auto* ch = app.add_subcommand("hall", "Hall-number machinery");
  ch->require_subcommand(1);
  auto* ch_hn = ch->add_subcommand("hn", "hn of a family of partial functions");
  ch_hn->add_option("--pfns", pfns)->required();
  ch_hn->callback([&] { action = [&] { return emit(out, Json{{"hn", hn(parse_fnfamily(read_input(pfns)))}}); }; });
  auto* ch_HN = ch->add_subcommand("HN", "HN of a family of partial functions");
  ch_HN->add_option("--pfns", pfns)->required();
  ch_HN->add_flag("--witness", witness);
  ch_HN->callback([&] {
    action = [&] {
      const HallResult r = hall_norm_HN(parse_fnfamily(read_input(pfns)));
      Json j{{"HN", r.value}};
      if (witness) j["witness"] = Json{{"k", r.witness.k}, {"refined", pfns_json(r.witness.refined)}};
      return emit(out, j);
    };
  });
  auto* ch_delta = ch->add_subcommand("delta", "Minimal partial functions avoiding a set");
  ch_delta->add_option("--functions", functions)->required();
  ch_delta->callback([&] {
    action = [&] {
      out << emit_fnfamily(delta(parse_fnset(read_input(functions))));
      return kOk;
    };
  });
  auto* ch_D = ch->add_subcommand("D", "Total functions extending no member");
  ch_D->add_option("--pfns", pfns)->required();
  ch_D->callback([&] {
    action = [&] {
      out << emit_fnset(dset(parse_fnfamily(read_input(pfns))));
      return kOk;
    };
  });

  auto* cb = app.add_subcommand("bridge", "Maps between the norms");
  cb->require_subcommand(1);
  auto* cb_subset = cb->add_subcommand("subset", "norm4 of a profile preimage against norm2");
  cb_subset->add_option("--n", n)->required();
  cb_subset->add_option("--N", N)->required();
  cb_subset->add_option("--family", family)->required();
  cb_subset->callback([&] {
    action = [&] {
      const Family B = parse_family(read_input(family));
      if (B.universe() != N) throw UsageError("family universe must equal N");
      const SubsetBridgeReport r = subset_bridge_check(n, N, B);
      emit(out, Json{{"k", r.k}, {"norm4", r.norm4}, {"holds", r.holds()}, {"functions", Json::parse(emit_function_list(r.A))}});
      return r.holds() ? kOk : kFound;
    };
  });
  auto* cb_pplus = cb->add_subcommand("pplus", "Bounds relating P+(A) and norm4");
  cb_pplus->add_option("--functions", functions)->required();
  cb_pplus->callback([&] {
    action = [&] {
      const FnSet A = parse_fnset(read_input(functions));
      const PplusReport r = pplus_bounds_check(A);
      Json fails = Json::array();
      for (Mask p : r.iii_failures) fails.push_back(Json::parse(emit_mask(p)));
      emit(out, Json{{"N", r.N},
                     {"splitting", r.splitting},
                     {"norm4", r.norm4},
                     {"sigma", Json::parse(emit_pfn(r.sigma))},
                     {"i", r.i_holds},
                     {"ii_applies", r.ii_applies},
                     {"ii", r.ii_holds},
                     {"ii_corrected", r.ii_corrected_holds},
                     {"iii_failures", fails},
                     {"iii_corrected", r.iii_corrected_holds},
                     {"corollary_n", r.corollary_n},
                     {"corollary", r.corollary_holds},
                     {"corollary_corrected", r.corollary_corrected_holds}});
      return r.hard_holds() ? kOk : kFound;
    };
  });
  auto* cb_pstar = cb->add_subcommand("pstar-scan", "Counterexample scan for the P* claim");
  cb_pstar->add_option("--N", N)->required()->check(CLI::Range(1u, 6u));
  cb_pstar->callback([&] {
    action = [&] {
      const PstarScanReport r = pstar_claim_scan(N, g.budget ? g.budget : 1u << 20, true);
      Json j{{"N", r.N}, {"sets_examined", r.sets_examined}, {"exhausted", r.exhausted}};
      if (r.first) {
        const auto& c = *r.first;
        j["counterexample"] = Json{{"n", c.n},
                                   {"A", Json::parse(emit_function_list(c.A))},
                                   {"sigma", Json::parse(emit_pfn(c.sigma))},
                                   {"p", Json::parse(emit_mask(c.p))}};
      } else {
        j["counterexample"] = nullptr;
      }
      emit(out, j);
      if (r.first) return kFound;
      return r.exhausted ? kOk : kBudget;
    };
  });

  auto* ck = app.add_subcommand("kgon", "Splitting number of all k-gons");
  ck->add_option("--N", N)->required();
  ck->add_option("--k", k)->required();
  ck->callback([&] {
    action = [&] {
      const KgonReport r = kgon_analysis(N, k);
      emit(out, Json{{"N", r.N},
                     {"k", r.k},
                     {"exact", r.exact},
                     {"ceil", r.ceil_value},
                     {"stated", r.stated_value},
                     {"match", r.matches_claim()},
                     {"partition", parts_json(r.witness)}});
      return r.matches_claim() ? kOk : kFound;
    };
  });

  auto* cv = app.add_subcommand("verify", "Run verification suites");
  cv->add_option("--suite", suite, "Suite name");
  cv->add_flag("--all", all, "Run every suite");
  cv->add_option("--cases", cases, "Case count (0 = suite default)");
  cv->allow_extras();
  cv->callback([&] {
    action = [&] {
      if (all == !suite.empty()) throw UsageError("give exactly one of --suite or --all");
      const auto params = extra_params(cv->remaining());
      std::vector<Report> reports;
      auto run = [&](const std::string& name) {
        SuiteSpec s;
        s.name = name;
        s.params = params;
        s.seed = g.seed;
        s.cases = cases;
        s.budget = g.budget;
        s.jobs = g.jobs;
        reports.push_back(run_suite(s));
      };
      if (all)
        for (const auto& info : suite_registry()) run(info.name);
      else
        run(suite);
      emit_reports(out, g, reports);
      return combined_exit(reports);
    };
  });

  auto* cs = app.add_subcommand("scan", "Sweep a suite over a parameter grid into CSV");
  cs->add_option("--suite", suite)->required();
  cs->add_option("--grid", grid, "key=lo..hi, repeatable")->required();
  cs->add_option("--cases", cases);
  cs->callback([&] {
    action = [&] {
      std::vector<std::pair<std::string, std::pair<std::int64_t, std::int64_t>>> axes;
      for (const auto& spec : grid) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) throw UsageError("grid axis must look like key=lo..hi");
        const auto range = parse_range(spec.substr(eq + 1));
        if (range.first > range.second) throw UsageError("empty range in " + spec);
        axes.emplace_back(spec.substr(0, eq), range);
      }
      std::vector<Report> reports;
      std::map<std::string, std::int64_t> point;
      std::function<void(std::size_t)> sweep = [&](std::size_t d) {
        if (d == axes.size()) {
          SuiteSpec s;
          s.name = suite;
          s.params = point;
          s.seed = g.seed;
          s.cases = cases;
          s.budget = g.budget;
          s.jobs = g.jobs;
          reports.push_back(run_suite(s));
          return;
        }
        for (auto v = axes[d].second.first; v <= axes[d].second.second; ++v) {
          point[axes[d].first] = v;
          sweep(d + 1);
        }
      };
      sweep(0);
      Globals csv = g;
      csv.format = "csv";
      emit_reports(out, csv, reports);
      return combined_exit(reports);
    };
  });

  auto* cr = app.add_subcommand("refute-baju", "Check the extremal family against the 1-2^{-nk} density lemma");
  cr->add_option("--n", n)->required();
  cr->add_option("--G", G)->required();
  cr->add_option("--k", k)->required();
  cr->callback([&] {
    action = [&] {
      const DensityRefutation r = density_refutation_check(SubsetNormParams(n, G), k);
      emit(out, Json{{"n", r.n},
                     {"G", r.G},
                     {"H", r.H},
                     {"k", r.k},
                     {"norm", r.norm},
                     {"family_size", r.family_size.str()},
                     {"universe_size", r.universe_size.str()},
                     {"ratio", r.ratio.str()},
                     {"formula_ratio", r.formula_ratio.str()},
                     {"product", r.product.str()},
                     {"threshold", r.threshold.str()},
                     {"lemma_bound", r.lemma_bound.str()},
                     {"refutes", r.refutes()}});
      return r.refutes() ? kFound : kOk;
    };
  });

  auto* cp = app.add_subcommand("report", "Consolidated list of stated claims that fail");
  cp->callback([&] {
    action = [&] {
      const Report r = discrepancy_report(default_discrepancy_catalog());
      emit_reports(out, g, {r});
      return combined_exit({r});
    };
  });

  try {
    const auto ordered = hoist_globals(args);
    std::vector<std::string> rev(ordered.rbegin(), ordered.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace normforge::cli
