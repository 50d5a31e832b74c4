#include <set>

#include "normforge/axioms.hpp"
#include "normforge/bridges.hpp"
#include "normforge/errors.hpp"
#include "suites.hpp"

namespace normforge::detail {
namespace {

std::vector<PartialFn> all_pfns(unsigned N) {
  std::vector<PartialFn> out;
  for (Mask d = 0; d <= full_mask(N); ++d)
    for (Mask o = d;; o = (o - 1) & d) {
      out.emplace_back(d, o);
      if (o == 0) break;
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialFn> subfunctions(const PartialFn& s) {
  std::vector<PartialFn> out;
  for (Mask z = s.dom;; z = (z - 1) & s.dom) {
    out.push_back(s.restrict_to(z));
    if (z == 0) break;
  }
  return out;
}

FnFamily family_of(unsigned N, const std::vector<PartialFn>& ground, std::uint64_t idx) {
  std::vector<PartialFn> m;
  for (std::size_t j = 0; j < ground.size(); ++j)
    if (idx >> j & 1) m.push_back(ground[j]);
  return FnFamily(N, std::move(m));
}

Mask random_subset(CaseRng& rng, unsigned N) { return static_cast<Mask>(rng.bits(N)); }

// ---- hall ----

Report roundtrip_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 3));
  if (N > 3) throw UsageError("hall.roundtrip is exhaustive and limited to N <= 3");
  const std::uint64_t count = std::uint64_t{1} << (1u << N);
  return run_cases(spec, params_json({{"N", N}}), count, [&](std::uint64_t i, CaseOutcome& out) {
    const FnSet A = FnSet::from_index_bits(N, i);
    if (dset(delta(A)) != A) out.violation("D(Delta(A)) = A", Json{{"A", fnset_json(A)}}, {A.size(), i});
  });
}

Report minimality_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 3));
  if (N > 3) throw UsageError("hall.minimality is exhaustive and limited to N <= 3");
  const auto pf = all_pfns(N);
  return run_cases(spec, params_json({{"N", N}}), std::uint64_t{1} << (1u << N), [&](std::uint64_t i, CaseOutcome& out) {
    const FnSet A = FnSet::from_index_bits(N, i);
    const FnFamily d = delta(A);
    for (const PartialFn& s : pf) {
      bool immediate = !meets(s, A), all = !meets(s, A);
      for (const PartialFn& r : subfunctions(s)) {
        if (r == s || meets(r, A)) continue;
        all = false;
        if (r.size() + 1 == s.size()) immediate = false;
      }
      if (immediate != all)
        out.violation("immediate subfunctions decide minimality", Json{{"A", fnset_json(A)}, {"sigma", pfn_json(s)}}, {A.size(), i});
      if (all != d.contains(s))
        out.violation("Delta(A) is exactly the minimal functions avoiding A", Json{{"A", fnset_json(A)}, {"sigma", pfn_json(s)}, {"in_delta", d.contains(s)}},
                      {A.size(), i});
    }
  });
}

Report subset_lemma_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 6));
  const std::uint64_t cases = spec.cases ? spec.cases : 1000;
  return run_cases(spec, params_json({{"N", N}}), cases, [&](std::uint64_t i, CaseOutcome& out) {
    CaseRng rng(spec.seed, i);
    const FnSet A = random_fnset(rng, N);
    const FnFamily d = delta(A);
    for (int t = 0; t < 8; ++t) {
      const Mask dom = random_subset(rng, N);
      const PartialFn s(dom, random_subset(rng, N) & dom);
      if (meets(s, A)) continue;
      bool found = false;
      for (const PartialFn& r : d) found = found || r.subfunction_of(s);
      if (!found) out.violation("a function avoiding A sits above a member of Delta(A)", Json{{"A", fnset_json(A)}, {"sigma", pfn_json(s)}}, {A.size(), i});
    }
  });
}

Report delta_order_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 3));
  if (N > 3) throw UsageError("hall.delta_order is exhaustive and limited to N <= 3");
  const std::uint64_t count = std::uint64_t{1} << (1u << N);
  std::vector<FnFamily> deltas;
  for (std::uint64_t i = 0; i < count; ++i) deltas.push_back(delta(FnSet::from_index_bits(N, i)));
  return run_cases(spec, params_json({{"N", N}}), count, [&](std::uint64_t a, CaseOutcome& out) {
    for (std::uint64_t b = 0; b < count; ++b) {
      const bool subset = (a & ~b) == 0;
      const Json payload{{"A", fnset_json(FnSet::from_index_bits(N, a))}, {"B", fnset_json(FnSet::from_index_bits(N, b))}};
      if (a != b && deltas[a] == deltas[b]) out.violation("Delta is injective", payload, {a, b});
      if (subset != preceq(deltas[b], deltas[a])) out.violation("A ⊆ B iff Delta(B) ⪯ Delta(A)", payload, {a, b});
    }
  });
}

Report hn_antitone_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 2));
  const auto pf = all_pfns(N);
  if (pf.size() > 12) throw UsageError("hall.hn_antitone is exhaustive and limited to N <= 2");
  const std::uint64_t count = std::uint64_t{1} << pf.size();
  std::vector<unsigned> h(count);
  for (std::uint64_t i = 0; i < count; ++i) h[i] = hn(family_of(N, pf, i));
  return run_cases(spec, params_json({{"N", N}}), count, [&](std::uint64_t big, CaseOutcome& out) {
    for (std::size_t j = 0; j < pf.size(); ++j)
      if (big >> j & 1) {
        const std::uint64_t small = big & ~(std::uint64_t{1} << j);
        if (h[big] > h[small])
          out.violation("hn antitone under inclusion", Json{{"small", fnfamily_json(family_of(N, pf, small))}, {"large", fnfamily_json(family_of(N, pf, big))}},
                        {static_cast<std::uint64_t>(std::popcount(big)), big, small});
      }
  });
}

// max hn over the images of choice functions picking one subfunction per member.
unsigned hn_choice_oracle(const FnFamily& d) {
  std::vector<std::vector<PartialFn>> options;
  for (const PartialFn& s : d) options.push_back(subfunctions(s));
  unsigned best = 0;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::vector<PartialFn> img;
    for (std::size_t j = 0; j < options.size(); ++j) img.push_back(options[j][pick[j]]);
    best = std::max(best, hn(FnFamily(d.N(), std::move(img))));
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
    if (j == pick.size()) return best;
  }
}

Report hn_oracle_suite(const SuiteSpec& spec) {
  const auto Nmax = static_cast<unsigned>(spec.param("N", 4));
  const std::uint64_t cases = spec.cases ? spec.cases : 300;
  return run_cases(spec, params_json({{"N", Nmax}}), cases, [&](std::uint64_t i, CaseOutcome& out) {
    CaseRng rng(spec.seed, i);
    const auto N = static_cast<unsigned>(rng.between(1, Nmax));
    const FnFamily d = random_fnfamily(rng, N, 3);
    const unsigned fast = hall_norm_HN(d).value, slow = d.empty() ? N + 1 : hn_choice_oracle(d);
    if (fast != slow) out.violation("HN equals the largest hn over refinements", Json{{"N", N}, {"delta", fnfamily_json(d)}, {"HN", fast}, {"oracle", slow}}, {d.size(), i});
  });
}

Report split_min_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 6));
  const std::uint64_t cases = spec.cases ? spec.cases : 1000;
  return run_cases(spec, params_json({{"N", N}}), cases, [&](std::uint64_t i, CaseOutcome& out) {
    CaseRng rng(spec.seed, i);
    const FnFamily d = random_fnfamily(rng, N, 5);
    const Mask Z = random_subset(rng, N);
    const LRSplit s = lr_split(d, Z);
    const unsigned both = hall_norm_HN(family_union(s.L, s.R)).value;
    const unsigned l = hall_norm_HN(s.L).value, r = hall_norm_HN(s.R).value;
    if (both != std::min(l, r))
      out.violation("HN(L u R) = min(HN(L), HN(R))", Json{{"delta", fnfamily_json(d)}, {"Z", mask_json(Z)}, {"HN", {both, l, r}}}, {d.size(), i});
  });
}

Report half_bounds_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 6));
  const std::uint64_t cases = spec.cases ? spec.cases : 1000;
  return run_cases(spec, params_json({{"N", N}}), cases, [&](std::uint64_t i, CaseOutcome& out) {
    CaseRng rng(spec.seed, i);
    const FnFamily d = random_fnfamily(rng, N, 5);
    const Mask Z = random_subset(rng, N);
    const unsigned h = hn(d);
    if (h <= 1) return;
    const LRSplit s = lr_split(d, Z);
    const unsigned l = hn(s.L), r = hn(s.R);
    if (2 * l < h || 2 * r < h)
      out.violation("hn(L) and hn(R) are at least hn(delta)/2", Json{{"delta", fnfamily_json(d)}, {"Z", mask_json(Z)}, {"hn", {h, l, r}}}, {d.size(), i});
  });
}

void judge_side(const std::string& side, const FnFamily& part, unsigned side_points, unsigned side_norm, unsigned whole, const Json& payload,
                CaseOutcome& out, std::vector<std::uint64_t> order) {
  if (!part.empty()) {
    if (2 * side_norm < whole) out.violation("norm4(A_" + side + ") >= norm4(A)/2", payload, order);
    return;
  }
  // With no members on this side, A_side is every function on the side.
  if (side_norm != side_points + 1) out.violation("an empty side gives the full set with norm |side|+1", payload, order);
  if (2 * side_norm < whole) out.discrepancy("norm4(A_" + side + ") >= norm4(A)/2 with " + side + " empty", payload, order);
}

Report cut_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 6));
  const std::uint64_t cases = spec.cases ? spec.cases : 1000;
  return run_cases(spec, params_json({{"N", N}}), cases, [&](std::uint64_t i, CaseOutcome& out) {
    CaseRng rng(spec.seed, i);
    const FnSet A = random_fnset(rng, N);
    const unsigned whole = hall_norm4(A);
    if (whole <= 1) return;
    const Mask Z = random_subset(rng, N);
    const CutResult c = cut(A, Z);
    const Json payload{{"A", fnset_json(A)}, {"Z", mask_json(Z)}, {"degenerate", c.degenerate}, {"L", fnfamily_json(c.L)}, {"R", fnfamily_json(c.R)}};
    const FnSet back = recombine(c, N, Z);
    for (Mask f : back)
      if (!A.contains(f)) {
        out.violation("recombined cut lies inside A", payload, {A.size(), i});
        break;
      }
    const unsigned zs = popcount(Z);
    judge_side("L", c.L, zs, hall_norm4(c.A_L), whole, payload, out, {A.size(), i});
    judge_side("R", c.R, N - zs, hall_norm4(c.A_R), whole, payload, out, {A.size(), i});
  });
}

Report glue_suite(const SuiteSpec& spec) {
  const auto N1 = static_cast<unsigned>(spec.param("N1", 2)), N2 = static_cast<unsigned>(spec.param("N2", 2));
  if (N1 > 3 || N2 > 3) throw UsageError("hall.glue is exhaustive and limited to blocks of at most 3 points");
  std::vector<FnSet> left, right;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << (1u << N1)); ++i)
    if (FnSet s = FnSet::from_index_bits(N1, i); hall_norm4(s) > 1) left.push_back(s);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << (1u << N2)); ++i)
    if (FnSet s = FnSet::from_index_bits(N2, i); hall_norm4(s) > 1) right.push_back(s);
  return run_cases(spec, params_json({{"N1", N1}, {"N2", N2}}), left.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const unsigned a = hall_norm4(left[i]);
    for (std::size_t j = 0; j < right.size(); ++j) {
      const unsigned b = hall_norm4(right[j]), g = hall_norm4(glue(left[i], right[j]));
      if (g < std::min(a, b))
        out.violation("norm4 of the glued set >= min of the parts", Json{{"A1", fnset_json(left[i])}, {"A2", fnset_json(right[j])}, {"norms", {a, b, g}}},
                      {i, j});
    }
  });
}

Report empty_r_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 4));
  const std::uint64_t cases = spec.cases ? spec.cases : 1000;
  const Mask half = full_mask(N / 2);
  // Cases past `cases`: the remark instances, one per subfunction ρ ⊇ Z-part.
  std::vector<PartialFn> rhos;
  const Mask rest = full_mask(N) & ~half;
  for (Mask extra = rest;; extra = (extra - 1) & rest) {
    rhos.emplace_back(half | extra, 0);
    if (extra == 0) break;
  }
  return run_cases(spec, params_json({{"N", N}}), cases + 1 + rhos.size(), [&](std::uint64_t i, CaseOutcome& out) {
    if (i == cases) {
      const EmptyRReport r = empty_R_bound_check(FnFamily(N, {PartialFn::total(N, 0)}), half);
      if (!r.equality()) out.violation("a single total function attains HN(L) = HN(delta) - N/2", Json{{"N", N}, {"HN", r.HN_delta}, {"HN_L", r.HN_L}});
      return;
    }
    if (i > cases) {
      const PartialFn& rho = rhos[i - cases - 1];
      const EmptyRReport r = empty_R_bound_check(cone(rho, N), half);
      const Json payload{{"N", N}, {"rho", pfn_json(rho)}, {"HN", r.HN_delta}, {"HN_L", r.HN_L}, {"bound", r.bound.str()}};
      if (!r.holds()) out.violation("HN(L) >= HN(delta) - N/2", payload);
      if (!r.equality()) out.discrepancy("the cone over rho attains HN(L) = HN(delta) - N/2", payload, {rho.size()});
      return;
    }
    CaseRng rng(spec.seed, i);
    const Mask Z = random_subset(rng, N);
    std::vector<PartialFn> keep;
    for (const PartialFn& s : random_fnfamily(rng, N, 6))
      if (popcount(s.dom & Z) >= popcount(s.dom & ~Z)) keep.push_back(s);
    const FnFamily d(N, keep);
    const EmptyRReport r = empty_R_bound_check(d, Z);
    if (!r.holds())
      out.violation("HN(L) >= HN(delta) - N/2 when R is empty", Json{{"delta", fnfamily_json(d)}, {"Z", mask_json(Z)}, {"HN", r.HN_delta}, {"HN_L", r.HN_L}},
                    {d.size(), i});
  });
}

Report hall_axioms_suite(const SuiteSpec& spec) {
  const auto Nmax = static_cast<unsigned>(spec.param("N", 3));
  return run_cases(spec, params_json({{"N", Nmax}}), Nmax, [&](std::uint64_t i, CaseOutcome& out) {
    const auto N = static_cast<unsigned>(i + 1);
    const AxiomReport r = axiom_check(NormId::hall, {}, FnSet::full(N), spec.seed);
    if (!r.monotone || !r.positive) out.violation("norm4 monotone and positive", Json{{"N", N}});
    if (!r.singleton) out.discrepancy("norm4 fails the singleton axiom: the value on {f} is 2", Json{{"N", N}, {"checks", r.checks}});
  });
}

Report triangle_failure_suite(const SuiteSpec& spec) {
  const auto Nmax = static_cast<unsigned>(spec.param("N", 6));
  return run_cases(spec, params_json({{"N", Nmax}}), Nmax, [&](std::uint64_t i, CaseOutcome& out) {
    const auto N = static_cast<unsigned>(i + 1);
    const FnSet A = dset(FnFamily(N, {PartialFn(1, 0)})), B = dset(FnFamily(N, {PartialFn(1, 1)}));
    std::vector<Mask> u(A.members());
    u.insert(u.end(), B.begin(), B.end());
    const unsigned a = hall_norm4(A), b = hall_norm4(B), ab = hall_norm4(FnSet(N, u));
    if (a != 2 || b != 2 || ab != N + 1) out.violation("norm4 values 2, 2 and N+1 on the triangle instance", Json{{"N", N}, {"norms", {a, b, ab}}});
  });
}

Report size_bound_suite(const SuiteSpec& spec) {
  const auto Nx = static_cast<unsigned>(spec.param("exhaustive_N", 3));
  const auto Nr = static_cast<unsigned>(spec.param("N", 5));
  const std::uint64_t random_cases = spec.cases ? spec.cases : 1000;
  std::vector<std::pair<unsigned, std::uint64_t>> grid;
  for (unsigned N = 1; N <= Nx; ++N)
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << (1u << N)); ++b) grid.emplace_back(N, b);
  return run_cases(spec, params_json({{"exhaustive_N", Nx}, {"N", Nr}}), grid.size() + random_cases, [&](std::uint64_t i, CaseOutcome& out) {
    FnSet A(1);
    if (i < grid.size()) {
      A = FnSet::from_index_bits(grid[i].first, grid[i].second);
    } else {
      CaseRng rng(spec.seed, i);
      A = random_fnset(rng, static_cast<unsigned>(rng.between(Nx + 1, Nr)));
    }
    const unsigned v = hall_norm4(A);
    if (v < 2) return;
    const BigCount lb = hall_size_lower_bound(A.N(), v - 1);
    if (BigCount(A.size()) < lb) out.violation("|A| >= inclusion-exclusion bound at norm4 = k+1", Json{{"A", fnset_json(A)}, {"norm4", v}, {"bound", lb.str()}}, {A.size(), i});
  });
}

Report selector_suite(const SuiteSpec& spec) {
  const auto N = static_cast<unsigned>(spec.param("N", 6));
  const std::uint64_t cases = spec.cases ? spec.cases : 500;
  return run_cases(spec, params_json({{"N", N}}), cases, [&](std::uint64_t i, CaseOutcome& out) {
    CaseRng rng(spec.seed, i);
    const FnFamily d = random_fnfamily(rng, N, 5);
    const unsigned h = hn(d), H = hall_norm_HN(d).value;
    for (unsigned k = 1; k <= N; ++k) {
      const auto sel = find_selector(d, k);
      const Json payload{{"delta", fnfamily_json(d)}, {"k", k}, {"hn", h}, {"HN", H}};
      if (sel) {
        Mask used = 0;
        bool ok = sel->assignment.size() == d.size();
        for (const auto& [s, F] : sel->assignment) {
          ok = ok && popcount(F) == k && is_subset(F, s.dom) && !(used & F) && d.contains(s);
          used |= F;
        }
        if (!ok) out.violation("selector picks disjoint k-subsets of the domains", payload, {d.size(), i, k});
        if (H < k + 1) out.violation("a k-selector gives HN >= k+1", payload, {d.size(), i, k});
      } else if (h >= k + 1 && !d.empty()) {
        out.violation("hn >= k+1 gives a k-selector", payload, {d.size(), i, k});
      }
    }
  });
}

// ---- bridges ----

Report profile_bijection_suite(const SuiteSpec& spec) {
  const auto Nmax = static_cast<unsigned>(spec.param("N", 6));
  return run_cases(spec, params_json({{"N", Nmax}}), Nmax, [&](std::uint64_t i, CaseOutcome& out) {
    const auto N = static_cast<unsigned>(i + 1);
    std::set<Mask> seen;
    for (Mask p = 0; p <= full_mask(N); ++p) {
      const PartialFn f = profile_inverse(p, N);
      if (!f.is_total(N) || profile(f) != p || !seen.insert(profile(f)).second)
        out.violation("profile is a bijection from total functions onto subsets", Json{{"N", N}, {"p", mask_json(p)}});
    }
  });
}

Report subset_bridge_suite(const SuiteSpec& spec) {
  const auto n = static_cast<unsigned>(spec.param("n", 1)), N = static_cast<unsigned>(spec.param("N", 4));
  const SubsetNormParams p(n, N);
  const Family X = universe_X(p, 12);
  return run_cases(spec, params_json({{"n", n}, {"N", N}}), std::uint64_t{1} << X.size(), [&](std::uint64_t i, CaseOutcome& out) {
    std::vector<Mask> m;
    for (std::size_t j = 0; j < X.size(); ++j)
      if (i >> j & 1) m.push_back(X.members()[j]);
    const Family B(N, m);
    const SubsetBridgeReport r = subset_bridge_check(n, N, B);
    if (!r.holds()) out.violation("norm4 of the profile preimage <= norm2 + 1", Json{{"B", family_json(B)}, {"k", r.k}, {"norm4", r.norm4}}, {B.size(), i});
  });
}

Report edge_lemma_suite(const SuiteSpec& spec) {
  const auto Nmax = static_cast<unsigned>(spec.param("N", 5));
  std::vector<std::pair<unsigned, PartialFn>> grid;
  for (unsigned N = 2; N <= Nmax; ++N)
    for (const PartialFn& s : all_pfns(N)) grid.emplace_back(N, s);
  return run_cases(spec, params_json({{"N", Nmax}}), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto& [N, s] = grid[i];
    const auto miss = edge_lemma_missing(s, N);
    if (!miss.empty()) {
      Json m = Json::array();
      for (Mask e : miss) m.push_back(mask_json(e));
      out.violation("every edge of dom(sigma) other than P(sigma) lies in P+(D({sigma}))", Json{{"N", N}, {"sigma", pfn_json(s)}, {"missing", m}}, {N, i});
    }
  });
}

Json pplus_json(const FnSet& A, const PplusReport& r) {
  Json fails = Json::array();
  for (Mask p : r.iii_failures) fails.push_back(mask_json(p));
  return Json{{"N", A.N()},
              {"A", fnset_json(A)},
              {"splitting", r.splitting},
              {"norm4", r.norm4},
              {"sigma", pfn_json(r.sigma)},
              {"i", r.i_holds},
              {"ii", r.ii_holds},
              {"iii_failures", fails},
              {"corollary_n", r.corollary_n},
              {"corollary", r.corollary_holds}};
}

Report pplus_bounds_suite(const SuiteSpec& spec) {
  const auto Nx = static_cast<unsigned>(spec.param("N", 4));
  const auto max_members = static_cast<unsigned>(spec.param("max_members", 4));
  const std::uint64_t random_cases = spec.cases ? spec.cases : 300;
  std::vector<FnSet> fixed;
  const auto total = 1u << Nx;
  for (unsigned s = 0; s <= max_members && s <= total; ++s)
    for_each_k_subset(total, s, [&](Mask idx) { fixed.push_back(FnSet::from_index_bits(Nx, idx)); });
  for (unsigned N : {8u, 10u}) fixed.push_back(two_block_construction(N));
  return run_cases(spec, params_json({{"N", Nx}, {"max_members", max_members}}), fixed.size() + random_cases, [&](std::uint64_t i, CaseOutcome& out) {
    FnSet A(1);
    if (i < fixed.size()) {
      A = fixed[i];
    } else {
      CaseRng rng(spec.seed, i);
      A = random_fnset(rng, static_cast<unsigned>(rng.between(3, 6)));
    }
    const PplusReport r = pplus_bounds_check(A);
    if (r.hard_holds() && r.literal_holds()) return;
    const Json payload = pplus_json(A, r);
    const std::vector<std::uint64_t> order{A.N(), A.size(), i};
    if (!r.hard_holds()) out.violation("P+ bounds (i), (ii) for k+1 > N/2, (iii) for |p| >= 2, corrected corollary", payload, order);
    if (!r.ii_holds) out.discrepancy("P+(A) needs k parts whenever norm4 = k+2 >= N/2+1", payload, order);
    if (!r.iii_failures.empty()) out.discrepancy("norm4 <= |p|+1 for every p with no superset in P+(A)", payload, order);
    if (!r.corollary_holds) out.discrepancy("norm4 <= n+1 when every member of P+(A) has at most n points", payload, order);
  });
}

Report pstar_scan_suite(const SuiteSpec& spec) {
  const auto Nmax = static_cast<unsigned>(spec.param("N", 4));
  const std::uint64_t budget = spec.cases ? spec.cases : 20000;
  return run_cases(spec, params_json({{"N", Nmax}}), Nmax, [&](std::uint64_t i, CaseOutcome& out) {
    const auto N = static_cast<unsigned>(i + 1);
    const PstarScanReport r = pstar_claim_scan(N, budget, false);
    if (!r.first) return;
    const auto& c = *r.first;
    Json payload{{"N", N}, {"n", c.n}, {"A", fnset_json(c.A)}, {"sigma", pfn_json(c.sigma)}, {"p", mask_json(c.p)},
                 {"sets_examined", r.sets_examined}, {"violating_sets", r.violating_sets}, {"exhausted", r.exhausted}};
    out.discrepancy("P(sigma) is not inside any p in P*(A) for sigma in Delta(A)", std::move(payload), {N});
  });
}

Report closing_instances_suite(const SuiteSpec& spec) {
  const auto inst = closing_instances();
  return run_cases(spec, Json::object(), inst.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto& c = inst[i];
    const bool ok = i == 0 ? (c.norm3 == 3 && c.norm4 <= 4) : (c.norm4 == 5 && c.norm3 == 1);
    if (!ok) out.violation("stored instance keeps its norm3/norm4 values", Json{{"instance", c.name}, {"norm3", c.norm3}, {"norm4", c.norm4}});
  });
}

}  // namespace

void add_hall_suites(std::vector<SuiteInfo>& out) {
  auto add = [&](std::string name, std::string statement, SuiteFn fn) { out.push_back({std::move(name), std::move(statement), std::move(fn)}); };
  add("hall.roundtrip", "D(Delta(A)) = A for every A ⊆ ^3 2", roundtrip_suite);
  add("hall.minimality", "Delta(A) is the set of minimal avoiding functions; immediate subfunctions suffice", minimality_suite);
  add("hall.subset_lemma", "every sigma avoiding A extends a member of Delta(A)", subset_lemma_suite);
  add("hall.delta_order", "Delta is injective and A ⊆ B iff Delta(B) ⪯ Delta(A), N = 3", delta_order_suite);
  add("hall.hn_antitone", "hn is antitone under inclusion of families, N = 2", hn_antitone_suite);
  add("hall.HN_oracle", "HN equals the best hn over refinements, N <= 4", hn_oracle_suite);
  add("hall.split_min", "HN(L u R) = min(HN(L), HN(R))", split_min_suite);
  add("hall.half_bounds", "hn(L) and hn(R) are at least hn/2 when hn > 1", half_bounds_suite);
  add("hall.cut", "the cut sides keep half of norm4 and recombine inside A", cut_suite);
  add("hall.glue", "gluing keeps norm4 >= min of the parts", glue_suite);
  add("hall.empty_R", "HN(L) >= HN(delta) - N/2 when R is empty; extremal cases", empty_r_suite);
  add("hall.axioms", "norm4 monotone and positive; singleton bound reported", hall_axioms_suite);
  add("hall.triangle_failure", "norm4 of D({0->0}), D({0->1}) and their union is 2, 2, N+1", triangle_failure_suite);
  add("hall.size_bound", "|A| >= the inclusion-exclusion bound when norm4(A) = k+1", size_bound_suite);
  add("hall.selector", "k-selectors exist exactly between hn and HN", selector_suite);
  add("bridges.profile_bijection", "profile is a bijection from total functions onto subsets, N <= 6", profile_bijection_suite);
  add("bridges.subset_bridge", "norm4(P^-1[B]) <= norm2(B) + 1, all B at N = 4, n = 1", subset_bridge_suite);
  add("bridges.edge_lemma", "edges of dom(sigma) other than P(sigma) lie in P+(D({sigma})), N <= 5", edge_lemma_suite);
  add("bridges.pplus_bounds", "P+ bounds; literal forms reported", pplus_bounds_suite);
  add("bridges.pstar_scan", "counterexample scan for the P* claim", pstar_scan_suite);
  add("bridges.closing_instances", "stored instances separating norm3 and norm4", closing_instances_suite);
}

}  // namespace normforge::detail
