#include <tuple>

#include "normforge/axioms.hpp"
#include "normforge/combinatorics.hpp"
#include "normforge/errors.hpp"
#include "normforge/exclusion.hpp"
#include "normforge/subset_norm.hpp"
#include "suites.hpp"

namespace normforge::detail {

Family random_family(CaseRng& rng, unsigned N, unsigned min_size, unsigned max_member_count) {
  const auto count = static_cast<unsigned>(rng.between(0, max_member_count));
  std::vector<Mask> members;
  for (unsigned i = 0; i < count; ++i) {
    Mask m;
    do {
      m = static_cast<Mask>(rng.bits(N));
    } while (popcount(m) < min_size);
    members.push_back(m);
  }
  return Family(N, std::move(members));
}

FnSet random_fnset(CaseRng& rng, unsigned N) {
  const std::uint64_t total = std::uint64_t{1} << N;
  std::vector<Mask> out;
  switch (rng.below(3)) {
    case 0: {
      const auto density = rng.between(1, 7);
      for (std::uint64_t f = 0; f < total; ++f)
        if (rng.chance(density, 8)) out.push_back(static_cast<Mask>(f));
      return FnSet(N, std::move(out));
    }
    case 1: {
      FnSet D = dset(random_fnfamily(rng, N, 4));
      out = D.members();
      const auto extra = rng.below(3);
      for (std::uint64_t i = 0; i < extra; ++i) out.push_back(static_cast<Mask>(rng.below(total)));
      return FnSet(N, std::move(out));
    }
    default: {
      for (std::uint64_t f = 0; f < total; ++f) out.push_back(static_cast<Mask>(f));
      const auto drop = rng.between(1, 4);
      for (std::uint64_t i = 0; i < drop; ++i) out.erase(out.begin() + static_cast<std::ptrdiff_t>(rng.below(out.size())));
      return FnSet(N, std::move(out));
    }
  }
}

FnFamily random_fnfamily(CaseRng& rng, unsigned N, unsigned max_members) {
  const auto count = static_cast<unsigned>(rng.between(1, max_members));
  std::vector<PartialFn> out;
  for (unsigned i = 0; i < count; ++i) {
    const auto dom = static_cast<Mask>(rng.bits(N));
    out.emplace_back(dom, static_cast<Mask>(rng.bits(N)) & dom);
  }
  return FnFamily(N, std::move(out));
}

namespace {

// ---- combinatorics ----

Report identity_suite(const SuiteSpec& spec, bool is_b) {
  const auto amax = static_cast<std::uint64_t>(spec.param("a", 20));
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> grid;
  for (std::uint64_t a = 1; a <= amax; ++a)
    for (std::uint64_t k = 1; k <= a; ++k)
      for (std::uint64_t b = std::max<std::uint64_t>(1, k - 1); b + k <= a; ++b) grid.emplace_back(k, a, b);
  return run_cases(spec, params_json({{"a", static_cast<std::int64_t>(amax)}}), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto [k, a, b] = grid[i];
    const IdentityCheck c = is_b ? verify_identity_B(k, a, b) : verify_identity_A(k, a, b);
    if (!c.equal())
      out.violation(is_b ? "identity B" : "identity A",
                    Json{{"k", k}, {"a", a}, {"b", b}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}}, {a, k, b});
  });
}

Report partial_count_suite(const SuiteSpec& spec) {
  const auto Nmax = static_cast<std::uint64_t>(spec.param("N", 12));
  const auto nmax = static_cast<std::uint64_t>(spec.param("n", 8));
  return run_cases(spec, params_json({{"N", static_cast<std::int64_t>(Nmax)}, {"n", static_cast<std::int64_t>(nmax)}}),
                   Nmax * nmax, [&](std::uint64_t i, CaseOutcome& out) {
                     const std::uint64_t N = i / nmax + 1, n = i % nmax + 1;
                     const auto [sum, pw] = partial_count(N, n);
                     if (sum != pw) out.violation("partial function count", Json{{"N", N}, {"n", n}, {"sum", sum.str()}, {"power", pw.str()}});
                   });
}

Report pascal_suite(const SuiteSpec& spec) {
  const auto cmax = static_cast<std::uint64_t>(spec.param("c", 64));
  return run_cases(spec, params_json({{"c", static_cast<std::int64_t>(cmax)}}), cmax + 1, [&](std::uint64_t c, CaseOutcome& out) {
    for (std::uint64_t d = 0; d <= c + 1; ++d)
      if (binomial(c, d) + binomial(c, d + 1) != binomial(c + 1, d + 1))
        out.violation("Pascal recurrence", Json{{"c", c}, {"d", d}});
  });
}

Report factorial_bounds_suite(const SuiteSpec& spec) {
  const auto mmax = static_cast<std::uint64_t>(spec.param("m", 100));
  return run_cases(spec, params_json({{"m", static_cast<std::int64_t>(mmax)}}), mmax, [&](std::uint64_t i, CaseOutcome& out) {
    const std::uint64_t m = i + 1;
    const FactorialBounds fb = factorial_bounds(m);
    const ExactRatio exact = ExactRatio::from_counts(factorial(m), BigCount(1));
    const ExactRatio tol = ExactRatio::from_double(kFactorialBoundTolerance);
    const ExactRatio lo = ExactRatio::from_double(fb.lower), hi = ExactRatio::from_double(fb.upper);
    if (lo > exact * (ExactRatio(1) + tol) || hi < exact * (ExactRatio(1) - tol))
      out.violation("factorial sandwich", Json{{"m", m}, {"lower", fb.lower}, {"upper", fb.upper}, {"factorial", factorial(m).str()}});
  });
}

// ---- setcore ----

Report restrict_laws_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 6));
  const std::uint64_t cases = spec.cases ? spec.cases : 1000;
  return run_cases(spec, params_json({{"N", N}}), cases, [&](std::uint64_t i, CaseOutcome& out) {
    CaseRng rng(spec.seed, i);
    const Family A = random_family(rng, N, 0, 12);
    const auto z = static_cast<Mask>(rng.bits(N)), z2 = static_cast<Mask>(rng.bits(N));
    if (restrict(A, full_mask(N)) != A) out.violation("restrict to the universe is the identity", Json{{"A", family_json(A)}}, {A.size(), i});
    if (restrict(restrict(A, z), z2) != restrict(A, z & z2))
      out.violation("restrict composes by intersection", Json{{"A", family_json(A)}, {"z", mask_json(z)}, {"z2", mask_json(z2)}}, {A.size(), i});
  });
}

Report restrict_vertex_deletion_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 6));
  const std::uint64_t cases = spec.cases ? spec.cases : 1000;
  return run_cases(spec, params_json({{"N", N}}), cases, [&](std::uint64_t i, CaseOutcome& out) {
    CaseRng rng(spec.seed, i);
    const Family A = random_family(rng, N, 0, 12);
    const auto v = static_cast<unsigned>(rng.below(N));
    std::vector<Mask> expect;
    for (Mask a : A)
      if (!(a & bit(v))) expect.push_back(a);
    if (restrict(A, full_mask(N) & ~bit(v)) != Family(N, expect))
      out.violation("restrict to N minus v drops exactly the members containing v", Json{{"A", family_json(A)}, {"v", v}}, {A.size(), i});
  });
}

Report codec_roundtrip_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 6));
  const std::uint64_t cases = spec.cases ? spec.cases : 1000;
  return run_cases(spec, params_json({{"N", N}}), cases, [&](std::uint64_t i, CaseOutcome& out) {
    CaseRng rng(spec.seed, i);
    const Family A = random_family(rng, N, 0, 12);
    const std::string text = emit_family(A);
    if (parse_family(text) != A || emit_family(parse_family(text)) != text)
      out.violation("family codec round trip", Json{{"family", text}}, {A.size(), i});
    const FnSet F = random_fnset(rng, N);
    if (parse_fnset(emit_fnset(F)) != F) out.violation("function-set codec round trip", Json{{"functions", emit_fnset(F)}});
    const FnFamily d = random_fnfamily(rng, N, 6);
    if (parse_fnfamily(emit_fnfamily(d)) != d) out.violation("partial-function codec round trip", Json{{"pfns", emit_fnfamily(d)}});
  });
}

struct AxiomCase {
  NormId id;
  NormParams params;
  AxiomSubject subject;
  std::string label;
};

std::vector<AxiomCase> axiom_cases() {
  std::vector<AxiomCase> cs;
  {
    std::vector<Mask> edges;
    for_each_k_subset(4, 2, [&](Mask e) { edges.push_back(e); });
    cs.push_back({NormId::counting, {}, Family(4, edges), "norm0 on the 2-subsets of 4"});
  }
  for (unsigned G = 2; G <= 8; ++G)
    for (unsigned F = 1; F < G; ++F)
      cs.push_back({NormId::exclusion, {F, G, 0}, full_mask(G), "norm1 F=" + std::to_string(F) + " G=" + std::to_string(G)});
  for (auto [n, G] : {std::pair{1u, 4u}, std::pair{2u, 4u}, std::pair{1u, 6u}, std::pair{2u, 8u}}) {
    const SubsetNormParams p(n, G);
    cs.push_back({NormId::subset, {0, 0, n}, universe_X(p), "norm2 on X n=" + std::to_string(n) + " G=" + std::to_string(G)});
  }
  for (unsigned N = 3; N <= 4; ++N) {
    std::vector<Mask> P;
    for (Mask a = 0; a <= full_mask(N); ++a)
      if (popcount(a) >= 2) P.push_back(a);
    cs.push_back({NormId::coloring, {}, Family(N, P), "norm3 on P_" + std::to_string(N)});
  }
  for (unsigned N = 2; N <= 3; ++N) cs.push_back({NormId::hall, {}, FnSet::full(N), "norm4 on all functions, N=" + std::to_string(N)});
  return cs;
}

Json axiom_failure_json(const AxiomReport& r) {
  Json arr = Json::array();
  for (const auto& f : r.failures)
    arr.push_back(Json{{"axiom", f.axiom}, {"smaller", f.smaller}, {"larger", f.larger},
                       {"smaller_value", f.smaller_value.str()}, {"larger_value", f.larger_value.str()}});
  return arr;
}

void judge_axioms(const AxiomCase& c, const AxiomReport& r, CaseOutcome& out) {
  if (c.id == NormId::hall) {
    // Monotone and positive are proved; the singleton bound fails (‖{f}‖ = 2).
    if (!r.monotone || !r.positive) out.violation("norm4 monotone and positive", Json{{"case", c.label}, {"failures", axiom_failure_json(r)}});
    if (!r.singleton)
      out.discrepancy("norm4 fails the singleton axiom: the value on {f} is 2", Json{{"case", c.label}, {"failures", axiom_failure_json(r)}});
    return;
  }
  if (!r.all_hold()) out.violation("norm axioms for " + norm_name(c.id), Json{{"case", c.label}, {"failures", axiom_failure_json(r)}});
}

Report axiom_matrix_suite(const SuiteSpec& spec) {
  const auto cs = axiom_cases();
  return run_cases(spec, Json::object(), cs.size(), [&](std::uint64_t i, CaseOutcome& out) {
    judge_axioms(cs[i], axiom_check(cs[i].id, cs[i].params, cs[i].subject, spec.seed), out);
  });
}

// ---- norm1 ----

std::vector<std::pair<unsigned, unsigned>> exclusion_grid(unsigned Gmax) {
  std::vector<std::pair<unsigned, unsigned>> g;
  for (unsigned G = 2; G <= Gmax; ++G)
    for (unsigned F = 1; F < G; ++F) g.emplace_back(F, G);
  return g;
}

Report norm1_monotone_suite(const SuiteSpec& spec) {
  const auto grid = exclusion_grid(static_cast<unsigned>(spec.param("G", 8)));
  return run_cases(spec, params_json({{"G", spec.param("G", 8)}}), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const ExclusionParams p(grid[i].first, grid[i].second);
    for (Mask B = 0; B <= full_mask(p.G); ++B)
      for (Mask A = B;; A = (A - 1) & B) {
        if (norm1(p, A) > norm1(p, B)) out.violation("norm1 monotone", Json{{"F", p.F}, {"G", p.G}, {"A", mask_json(A)}, {"B", mask_json(B)}});
        if (A == 0) break;
      }
  });
}

Report norm1_size_suite(const SuiteSpec& spec) {
  const auto grid = exclusion_grid(static_cast<unsigned>(spec.param("G", 8)));
  return run_cases(spec, params_json({{"G", spec.param("G", 8)}}), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const ExclusionParams p(grid[i].first, grid[i].second);
    for (Mask A = 0; A <= full_mask(p.G); ++A)
      if (size_from_norm1(p, norm1(p, A)) != ExactRatio(popcount(A)))
        out.violation("size recovered from norm1", Json{{"F", p.F}, {"G", p.G}, {"A", mask_json(A)}});
  });
}

Report norm1_axioms_suite(const SuiteSpec& spec) {
  const auto grid = exclusion_grid(static_cast<unsigned>(spec.param("G", 8)));
  return run_cases(spec, params_json({{"G", spec.param("G", 8)}}), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto [F, G] = grid[i];
    const AxiomCase c{NormId::exclusion, {F, G, 0}, full_mask(G), "norm1 F=" + std::to_string(F) + " G=" + std::to_string(G)};
    judge_axioms(c, axiom_check(c.id, c.params, c.subject, spec.seed), out);
  });
}

Report norm1_partition_suite(const SuiteSpec& spec) {
  const auto grid = exclusion_grid(static_cast<unsigned>(spec.param("G", 10)));
  return run_cases(spec, params_json({{"G", spec.param("G", 10)}}), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const ExclusionParams p(grid[i].first, grid[i].second);
    for (Mask A = 0; A <= full_mask(p.G); ++A) {
      const auto b = partition_bounds(p, A, full_mask(p.G) & ~A);
      if (!b.holds()) out.violation("partition straddles 2F/(G+2)", Json{{"F", p.F}, {"G", p.G}, {"A", mask_json(A)}});
    }
  });
}

Report norm1_union_suite(const SuiteSpec& spec) {
  const auto grid = exclusion_grid(static_cast<unsigned>(spec.param("G", 8)));
  return run_cases(spec, params_json({{"G", spec.param("G", 8)}}), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const ExclusionParams p(grid[i].first, grid[i].second);
    const Mask full = full_mask(p.G);
    for (Mask A = 0; A <= full; ++A)
      for (Mask B = 0; B <= full; ++B) {
        const UnionBoundCheck u = union_bound_check(p, A, B);
        if (u.holds && u.reversed_holds) continue;
        const Json payload{{"F", p.F}, {"G", p.G}, {"A", mask_json(A)}, {"B", mask_json(B)}, {"j", u.j.str()},
                           {"bound", u.bound ? u.bound->str() : "none"}};
        if (!u.holds) out.violation("j <= F/Q whenever Q > 0", payload, {p.G, p.F, A, B});
        if (!u.reversed_holds) out.discrepancy("union bound as printed (j >= F/Q)", payload, {p.G, p.F, A, B});
      }
  });
}

// ---- norm2 ----

SubsetNormParams subset_params(const SuiteSpec& spec, unsigned n, unsigned G) {
  return SubsetNormParams(static_cast<unsigned>(spec.param("n", n)), static_cast<unsigned>(spec.param("G", G)));
}

Report norm2_sandwich_suite(const SuiteSpec& spec) {
  const SubsetNormParams p = subset_params(spec, 1, 4);
  const SubsetNormTable t(p);
  const auto m = static_cast<unsigned>(t.universe_size());
  const bool exhaustive = m <= 12;
  const std::uint64_t cases = exhaustive ? (std::uint64_t{1} << m) : (spec.cases ? spec.cases : 1000);
  auto check = [&](std::uint32_t A, std::uint32_t B, CaseOutcome& out) {
    const unsigned a = t.norm(A), b = t.norm(B), ab = t.norm(A | B);
    if (std::max(a, b) > ab || ab > a + b)
      out.violation("max(|A|,|B|) <= |A u B| <= |A| + |B| for norm2",
                    Json{{"A", family_json(t.family(A))}, {"B", family_json(t.family(B))}, {"norms", {a, b, ab}}},
                    {static_cast<std::uint64_t>(std::popcount(A | B)), A, B});
  };
  return run_cases(spec, params_json({{"n", p.n}, {"G", p.G}, {"exhaustive", exhaustive}}), cases, [&](std::uint64_t i, CaseOutcome& out) {
    if (exhaustive) {
      for (std::uint32_t B = 0; B < (1u << m); ++B) check(static_cast<std::uint32_t>(i), B, out);
    } else {
      CaseRng rng(spec.seed, i);
      check(static_cast<std::uint32_t>(rng.bits(m)), static_cast<std::uint32_t>(rng.bits(m)), out);
    }
  });
}

Report norm2_localize_suite(const SuiteSpec& spec) {
  const SubsetNormParams p = subset_params(spec, 1, 4);
  const Family X = universe_X(p, 12);
  const auto m = static_cast<unsigned>(X.size());
  return run_cases(spec, params_json({{"n", p.n}, {"G", p.G}}), std::uint64_t{1} << m, [&](std::uint64_t i, CaseOutcome& out) {
    std::vector<Mask> mem;
    for (unsigned j = 0; j < m; ++j)
      if (i >> j & 1) mem.push_back(X.members()[j]);
    const Family A(p.G, mem);
    const unsigned k = norm2(p, A).k;
    for (unsigned l = 0; l < p.G; ++l)
      if (norm2(p, localize(A, l)).k + 1 < k)
        out.violation("norm2(A(l)) >= norm2(A) - 1", Json{{"A", family_json(A)}, {"l", l}}, {A.size(), i, l});
  });
}

Report norm2_monotone_suite(const SuiteSpec& spec) {
  const SubsetNormParams p = subset_params(spec, 1, 4);
  const SubsetNormTable t(p);
  const auto m = static_cast<unsigned>(t.universe_size());
  if (m > 20) throw BudgetError("norm2 monotone sweep limited to |X| <= 20");
  return run_cases(spec, params_json({{"n", p.n}, {"G", p.G}}), std::uint64_t{1} << m, [&](std::uint64_t i, CaseOutcome& out) {
    const auto B = static_cast<std::uint32_t>(i);
    for (unsigned j = 0; j < m; ++j)
      if (B >> j & 1) {
        const std::uint32_t A = B & ~(1u << j);
        if (t.norm(A) > t.norm(B))
          out.violation("norm2 monotone", Json{{"A", family_json(t.family(A))}, {"B", family_json(t.family(B))}},
                        {static_cast<std::uint64_t>(std::popcount(B)), B, A});
      }
  });
}

Report norm2_lbn2_suite(const SuiteSpec& spec) {
  const SubsetNormParams p = subset_params(spec, 1, 4);
  const std::map<std::string, std::int64_t> ep{{"n", p.n}, {"G", p.G}};
  return run_cases(spec, params_json({{"n", p.n}, {"G", p.G}}), p.H + 1, [&](std::uint64_t k, CaseOutcome& out) {
    const ExtremalResult r = exhaustive_extremal(NormId::subset, ep, Objective::min_size_at_norm, static_cast<unsigned>(k + 1));
    const BigCount ck = binomial(p.G, k), hk = binomial(p.H, k);
    const BigCount ceil = BigCount((ck.value() + hk.value() - 1) / hk.value());
    const ExactRatio lb = ratio_lower_bound(p, static_cast<unsigned>(k));
    if (!r.value) {
      out.violation("some family reaches norm k+1", Json{{"k", k}});
      return;
    }
    const ExactRatio ratio = ExactRatio::from_counts(*r.value, binomial(p.G, p.H));
    if (*r.value < ceil || ratio < lb)
      out.violation("min |A| at norm >= k+1 respects the lower ratio bound",
                    Json{{"k", k}, {"min_size", r.value->str()}, {"ceil_bound", ceil.str()}, {"ratio_bound", lb.str()}, {"witness", r.witness}});
  });
}

Report norm2_ubn2_suite(const SuiteSpec& spec) {
  std::vector<std::pair<unsigned, unsigned>> settings;
  if (spec.params.count("G")) settings.emplace_back(static_cast<unsigned>(spec.param("n", 1)), static_cast<unsigned>(spec.param("G", 4)));
  else settings = {{1, 4}, {2, 4}};
  std::vector<std::tuple<unsigned, unsigned, unsigned>> grid;
  for (auto [n, G] : settings) {
    const SubsetNormParams p(n, G);
    for (unsigned k = 0; k <= p.H; ++k) grid.emplace_back(n, G, k);
  }
  return run_cases(spec, Json::object(), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto [n, G, k] = grid[i];
    const SubsetNormParams p(n, G);
    const ExtremalResult r = exhaustive_extremal(NormId::subset, {{"n", n}, {"G", G}}, Objective::max_size_at_norm, k);
    const BigCount X = binomial(G, p.H);
    const ExactRatio expected = ExactRatio::from_counts(X, BigCount(1)) * ratio_upper_bound(p, k);
    const Json where{{"n", n}, {"G", G}, {"k", k}};
    if (!r.value || ExactRatio::from_counts(*r.value, BigCount(1)) != expected)
      out.violation("max |A| at norm <= k equals |X| times the upper ratio bound",
                    Json{{"at", where}, {"max_size", r.value ? r.value->str() : "none"}, {"expected", expected.str()}});
    if (k >= 1) {
      const Family E = extremal_family(p, k);
      if (norm2(p, E).k != k || BigCount(E.size()) != X - binomial(G - k, p.H - k))
        out.violation("extremal family has norm k and size C(G,H)-C(G-k,H-k)", Json{{"at", where}, {"family", family_json(E)}});
    }
  });
}

Report norm2_complement_identity_suite(const SuiteSpec& spec) {
  const auto Gmax = static_cast<unsigned>(spec.param("G", 20));
  std::vector<std::tuple<unsigned, unsigned, unsigned>> grid;
  for (unsigned G = 0; G <= Gmax; ++G)
    for (unsigned H = 0; H <= G; ++H)
      for (unsigned k = 0; k <= H; ++k) grid.emplace_back(G, H, k);
  return run_cases(spec, params_json({{"G", Gmax}}), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto [G, H, k] = grid[i];
    BigCount rhs(0);
    for (unsigned j = 1; j <= k; ++j) rhs += binomial(G - j, H - j + 1);
    if (binomial(G, H) - binomial(G - k, H - k) != rhs) out.violation("C(G,H)-C(G-k,H-k) = sum C(G-i,H-i+1)", Json{{"G", G}, {"H", H}, {"k", k}});
  });
}

Report norm2_stirling_suite(const SuiteSpec& spec) {
  const auto Gmax = static_cast<unsigned>(spec.param("G", 24));
  std::vector<std::tuple<unsigned, unsigned, unsigned>> grid;
  for (unsigned G = 2; G <= Gmax; ++G)
    for (unsigned n = 1; (1u << n) <= G; ++n) {
      if (G % (1u << n)) continue;
      const unsigned H = G >> n;
      for (unsigned k = 1; k < H; ++k) grid.emplace_back(n, G, k);
    }
  return run_cases(spec, params_json({{"G", Gmax}}), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto [n, G, k] = grid[i];
    const SubsetNormParams p(n, G);
    const double s = stirling_ratio_bound(p, k);
    const ExactRatio exact = ratio_lower_bound(p, k);
    if (!(ExactRatio::from_double(s) < exact))
      out.violation("Stirling estimate lies strictly below the exact lower ratio bound",
                    Json{{"n", n}, {"G", G}, {"k", k}, {"float", s}, {"exact", exact.str()}});
  });
}

Report norm2_density_suite(const SuiteSpec& spec) {
  const std::vector<std::tuple<unsigned, unsigned, unsigned>> grid{{1, 6, 2}, {1, 8, 2}, {2, 8, 2}, {1, 8, 3}, {1, 10, 2}, {1, 12, 3}};
  return run_cases(spec, Json::object(), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto [n, G, k] = grid[i];
    const DensityRefutation r = density_refutation_check(SubsetNormParams(n, G), k);
    if (!r.refutes())
      out.violation("extremal family has norm k yet ratio above 1-2^{-nk}",
                    Json{{"n", n}, {"G", G}, {"k", k}, {"norm", r.norm}, {"product", r.product.str()}, {"ratio", r.ratio.str()}});
  });
}

}  // namespace

void add_core_suites(std::vector<SuiteInfo>& out) {
  auto add = [&](std::string name, std::string statement, SuiteFn fn) { out.push_back({std::move(name), std::move(statement), std::move(fn)}); };
  add("combinatorics.identity_a", "identity A for all admissible (k,a,b), a <= 20", [](const SuiteSpec& s) { return identity_suite(s, false); });
  add("combinatorics.identity_b", "identity B for all admissible (k,a,b), a <= 20", [](const SuiteSpec& s) { return identity_suite(s, true); });
  add("combinatorics.partial_count", "partial-function count equals (n+1)^N for N <= 12, n <= 8", partial_count_suite);
  add("combinatorics.pascal", "C(c,d)+C(c,d+1) = C(c+1,d+1) for c <= 64", pascal_suite);
  add("combinatorics.factorial_bounds", "Stirling bounds sandwich m! for m <= 100", factorial_bounds_suite);
  add("setcore.restrict_laws", "restrict to N is the identity and restrictions compose by intersection", restrict_laws_suite);
  add("setcore.restrict_vertex_deletion", "restrict to N minus {v} keeps the members avoiding v", restrict_vertex_deletion_suite);
  add("setcore.codec_roundtrip", "parse after emit is the identity on canonical values", codec_roundtrip_suite);
  add("setcore.axiom_matrix", "norms 0-3 satisfy the norm axioms; norm4 fails only the singleton bound", axiom_matrix_suite);
  add("norm1.monotone", "A ⊆ B implies norm1(A) <= norm1(B), G <= 8", norm1_monotone_suite);
  add("norm1.size_relationship", "size_from_norm1(norm1(A)) = |A|, G <= 8", norm1_size_suite);
  add("norm1.axioms", "norm1 satisfies the norm axioms, G <= 8", norm1_axioms_suite);
  add("norm1.partition_bounds", "every partition straddles 2F/(G+2), G <= 10", norm1_partition_suite);
  add("norm1.union_bound", "j <= F/Q whenever Q > 0, all A, B, G <= 8", norm1_union_suite);
  add("norm2.sandwich", "max(norm2 A, norm2 B) <= norm2(A u B) <= norm2 A + norm2 B", norm2_sandwich_suite);
  add("norm2.localize", "norm2(A(l)) >= norm2(A) - 1", norm2_localize_suite);
  add("norm2.monotone", "A ⊆ B implies norm2(A) <= norm2(B)", norm2_monotone_suite);
  add("norm2.lbn2", "min |A| with norm2 >= k+1 is at least C(G,k)/C(H,k)", norm2_lbn2_suite);
  add("norm2.ubn2_tight", "max |A| with norm2 <= k equals |X| times the upper ratio bound", norm2_ubn2_suite);
  add("norm2.complement_identity", "C(G,H)-C(G-k,H-k) = sum_{i=1..k} C(G-i,H-i+1), G <= 20", norm2_complement_identity_suite);
  add("norm2.stirling", "the Stirling estimate is strictly below the exact lower ratio bound", norm2_stirling_suite);
  add("norm2.density_refutation", "the extremal family refutes the 1-2^{-nk} density lemma", norm2_density_suite);
}

}  // namespace normforge::detail
