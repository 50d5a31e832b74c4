#include <bit>

#include "normforge/coloring.hpp"
#include "normforge/errors.hpp"
#include "suites.hpp"

namespace normforge::detail {
namespace {

// All subfamilies of P_N addressed by bit masks over the ascending member list.
struct PolygonTable {
  unsigned N;
  std::vector<Mask> ground;
  std::vector<unsigned> split;  // splitting number per index mask

  explicit PolygonTable(unsigned n) : N(n) {
    for (Mask a = 0; a <= full_mask(N); ++a)
      if (popcount(a) >= 2) ground.push_back(a);
    if (ground.size() > 16) throw BudgetError("polygon table limited to |P_N| <= 16");
    split.resize(std::size_t{1} << ground.size());
    for (std::uint32_t i = 0; i < split.size(); ++i) split[i] = splitting_number(family(i)).c;
  }
  std::uint32_t count() const { return static_cast<std::uint32_t>(split.size()); }
  PolygonFamily family(std::uint32_t idx) const {
    std::vector<Mask> m;
    for (std::size_t j = 0; j < ground.size(); ++j)
      if (idx >> j & 1) m.push_back(ground[j]);
    return PolygonFamily(N, std::move(m));
  }
  unsigned norm(std::uint32_t idx) const { return ceil_log2(split[idx]); }
};

std::uint64_t size_of(std::uint32_t idx) { return static_cast<std::uint64_t>(std::popcount(idx)); }

Report monotone_suite(const SuiteSpec& spec) {
  const PolygonTable t(static_cast<unsigned>(spec.param("N", 4)));
  return run_cases(spec, params_json({{"N", t.N}}), t.count(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto B = static_cast<std::uint32_t>(i);
    for (std::uint32_t A = B;; A = (A - 1) & B) {
      if (t.norm(A) > t.norm(B))
        out.violation("norm3 monotone", Json{{"A", family_json(t.family(A).base())}, {"B", family_json(t.family(B).base())}},
                      {size_of(B), B, A});
      if (A == 0) break;
    }
  });
}

Report oracle_equivalence_suite(const SuiteSpec& spec) {
  const PolygonTable t(static_cast<unsigned>(spec.param("N", 4)));
  return run_cases(spec, params_json({{"N", t.N}}), t.count(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto idx = static_cast<std::uint32_t>(i);
    const PolygonFamily A = t.family(idx);
    const unsigned by_oracle = norm3_by_oracle(A), by_split = norm3(A).norm;
    if (by_oracle != by_split)
      out.violation("recursive definition agrees with ceil(log2 c)",
                    Json{{"A", family_json(A.base())}, {"oracle", by_oracle}, {"split", by_split}}, {size_of(idx), idx});
  });
}

Report ge_chain_suite(const SuiteSpec& spec) {
  const PolygonTable t(static_cast<unsigned>(spec.param("N", 4)));
  return run_cases(spec, params_json({{"N", t.N}}), t.count(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto idx = static_cast<std::uint32_t>(i);
    const PolygonFamily A = t.family(idx);
    bool prev = true;
    for (unsigned n = 0; n <= t.N; ++n) {
      const bool cur = norm3_ge_oracle(A, n);
      if (cur && !prev) out.violation("norm3 >= n+1 implies norm3 >= n", Json{{"A", family_json(A.base())}, {"n", n - 1}}, {size_of(idx), idx});
      prev = cur;
    }
  });
}

Report split_union_suite(const SuiteSpec& spec) {
  const PolygonTable t(static_cast<unsigned>(spec.param("N", 4)));
  // The last case is the rook construction at n = 2.
  return run_cases(spec, params_json({{"N", t.N}}), std::uint64_t{t.count()} + 1, [&](std::uint64_t i, CaseOutcome& out) {
    if (i == t.count()) {
      const auto [A, B] = rook_construction(2);
      Family u = family_union(A.base(), B.base());
      const unsigned ca = splitting_number(A).c, cb = splitting_number(B).c, cu = splitting_number(PolygonFamily(u)).c;
      if (ca != 2 || cb != 2 || cu != 4)
        out.violation("rook construction is tight: c(A)=c(B)=2 and c(A u B)=4", Json{{"cA", ca}, {"cB", cb}, {"cAuB", cu}});
      return;
    }
    const auto A = static_cast<std::uint32_t>(i);
    for (std::uint32_t B = 0; B < t.count(); ++B)
      if (t.split[A | B] > t.split[A] * t.split[B])
        out.violation("c(A u B) <= c(A) c(B)", Json{{"A", family_json(t.family(A).base())}, {"B", family_json(t.family(B).base())}},
                      {size_of(A | B), A, B});
  });
}

Report triangle_suite(const SuiteSpec& spec) {
  const PolygonTable t(static_cast<unsigned>(spec.param("N", 4)));
  return run_cases(spec, params_json({{"N", t.N}}), t.count(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto A = static_cast<std::uint32_t>(i);
    for (std::uint32_t B = 0; B < t.count(); ++B)
      if (t.norm(A | B) > t.norm(A) + t.norm(B))
        out.violation("norm3(A u B) <= norm3(A) + norm3(B)",
                      Json{{"A", family_json(t.family(A).base())}, {"B", family_json(t.family(B).base())}}, {size_of(A | B), A, B});
  });
}

ReducerSpec drop_min_reducer(unsigned N) {
  std::map<Mask, Mask> m;
  for (Mask a = 0; a <= full_mask(N); ++a)
    if (popcount(a) >= 3) m[a] = a & (a - 1);
  return ReducerSpec::table(std::move(m));
}

Report psi_monotone_suite(const SuiteSpec& spec) {
  const PolygonTable t(static_cast<unsigned>(spec.param("N", 4)));
  const std::vector<std::pair<std::string, ReducerSpec>> reducers{
      {"lex_min_edge", ReducerSpec::lex_min_edge()}, {"lex_max_edge", ReducerSpec::lex_max_edge()}, {"drop_min", drop_min_reducer(t.N)}};
  return run_cases(spec, params_json({{"N", t.N}}), t.count(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto idx = static_cast<std::uint32_t>(i);
    const PolygonFamily A = t.family(idx);
    const unsigned before = t.norm(idx);
    for (const auto& [name, g] : reducers) {
      const PolygonFamily B = psi_step(A, g);
      if (before > norm3(B).norm)
        out.violation("norm3(A) <= norm3(psi_g(A))", Json{{"A", family_json(A.base())}, {"reducer", name}, {"psi", family_json(B.base())}},
                      {size_of(idx), idx});
    }
  });
}

Report psi_injective_suite(const SuiteSpec& spec) {
  const auto Nmax = static_cast<unsigned>(spec.param("N", 6));
  return run_cases(spec, params_json({{"N", Nmax}}), Nmax, [&](std::uint64_t i, CaseOutcome& out) {
    const auto N = static_cast<unsigned>(i + 1);
    std::map<BigCount, Mask> seen;
    for (Mask a = 1; a <= full_mask(N); ++a) {
      auto [it, fresh] = seen.emplace(rank_encode(a, N), a);
      if (!fresh) out.violation("rank encoding is injective", Json{{"N", N}, {"a", mask_json(it->second)}, {"b", mask_json(a)}});
    }
  });
}

Report vertex_deletion_suite(const SuiteSpec& spec) {
  const PolygonTable t(static_cast<unsigned>(spec.param("N", 4)));
  return run_cases(spec, params_json({{"N", t.N}}), t.count(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto idx = static_cast<std::uint32_t>(i);
    const PolygonFamily A = t.family(idx);
    for (unsigned v = 0; v < t.N; ++v) {
      const PolygonFamily R(restrict(A.base(), full_mask(t.N) & ~bit(v)));
      if (norm3(R).norm + 1 < t.norm(idx))
        out.violation("norm3 of A restricted to N minus v >= norm3(A) - 1", Json{{"A", family_json(A.base())}, {"v", v}}, {size_of(idx), idx, v});
    }
  });
}

Report star_suite(const SuiteSpec& spec) {
  const auto Nmax = static_cast<unsigned>(spec.param("N", 6));
  std::vector<std::pair<unsigned, unsigned>> grid;
  for (unsigned N = 2; N <= Nmax; ++N)
    for (unsigned v = 0; v < N; ++v) grid.emplace_back(N, v);
  return run_cases(spec, params_json({{"N", Nmax}}), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto [N, v] = grid[i];
    const unsigned n = norm3(star_family(N, v)).norm;
    if (n != 1) out.violation("the star at v has norm3 1", Json{{"N", N}, {"v", v}, {"norm", n}});
  });
}

Report universe_extension_suite(const SuiteSpec& spec) {
  const PolygonTable t(static_cast<unsigned>(spec.param("N", 4)));
  return run_cases(spec, params_json({{"N", t.N}}), t.count(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto idx = static_cast<std::uint32_t>(i);
    const PolygonFamily A = t.family(idx);
    const unsigned e = norm3(extend_universe(A)).norm;
    if (e != t.norm(idx))
      out.violation("norm3 is unchanged by enlarging the universe", Json{{"A", family_json(A.base())}, {"N", t.N}, {"extended", e}}, {size_of(idx), idx});
  });
}

Report log_bound_suite(const SuiteSpec& spec) {
  const PolygonTable t(static_cast<unsigned>(spec.param("N", 4)));
  const auto Kmax = static_cast<unsigned>(spec.param("K", 10));
  // Exhaustive over P_N, then the complete graphs up to K vertices.
  return run_cases(spec, params_json({{"N", t.N}, {"K", Kmax}}), std::uint64_t{t.count()} + Kmax - 1, [&](std::uint64_t i, CaseOutcome& out) {
    if (i >= t.count()) {
      const auto K = static_cast<unsigned>(i - t.count() + 2);
      const SplitResult s = splitting_number(all_kgons(K, 2));
      if (s.c != K || ceil_log2(s.c) > ceil_log2(K)) out.violation("the complete graph needs N parts", Json{{"N", K}, {"c", s.c}});
      return;
    }
    const auto idx = static_cast<std::uint32_t>(i);
    if (t.split[idx] > t.N || t.norm(idx) > ceil_log2(t.N))
      out.violation("norm3(A) <= ceil(log2 N)", Json{{"A", family_json(t.family(idx).base())}, {"c", t.split[idx]}}, {size_of(idx), idx});
  });
}

Report kgon_suite(const SuiteSpec& spec) {
  const auto Nmax = static_cast<unsigned>(spec.param("N", 10));
  std::vector<std::pair<unsigned, unsigned>> grid;
  for (unsigned N = 2; N <= Nmax; ++N)
    for (unsigned k = 2; k <= N; ++k) grid.emplace_back(N, k);
  return run_cases(spec, params_json({{"N", Nmax}}), grid.size(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto [N, k] = grid[i];
    const KgonReport r = kgon_analysis(N, k);
    const Json payload{{"N", N}, {"k", k}, {"exact", r.exact}, {"ceil", r.ceil_value}, {"stated", r.stated_value}};
    // Parts of size k-1 split every k-gon and no part may hold k vertices.
    if (r.exact != r.ceil_value) out.violation("k-gons need exactly ceil(N/(k-1)) parts", payload, {N, k});
    if (!r.matches_claim()) out.discrepancy("k-gons split by min(ceil(N/(k-1)), floor(N/k)+1) parts", payload, {N, k});
  });
}

Report size_bounds_suite(const SuiteSpec& spec) {
  const PolygonTable t(static_cast<unsigned>(spec.param("N", 4)));
  // Exhaustive bounds over P_N, then attainment of the minimum by complete graphs.
  return run_cases(spec, params_json({{"N", t.N}}), std::uint64_t{t.count()} + 3, [&](std::uint64_t i, CaseOutcome& out) {
    if (i >= t.count()) {
      const auto k = static_cast<unsigned>(i - t.count() + 1);
      const unsigned K = (1u << (k - 1)) + 1;
      const PolygonFamily complete = all_kgons(K, 2);
      const SizeBounds b = size_bounds(K, k);
      if (norm3(complete).norm != k || BigCount(complete.size()) != b.min_size)
        out.violation("the complete graph on 2^{k-1}+1 vertices attains the minimum size",
                      Json{{"k", k}, {"size", complete.size()}, {"min_size", b.min_size.str()}});
      return;
    }
    const auto idx = static_cast<std::uint32_t>(i);
    const unsigned k = t.norm(idx);
    if (k == 0) return;
    const SizeBounds b = size_bounds(t.N, k);
    const BigCount size(size_of(idx));
    if (size < b.min_size || size > b.max_size)
      out.violation("min_size <= |A| <= max_size at norm3 = k",
                    Json{{"A", family_json(t.family(idx).base())}, {"k", k}, {"min", b.min_size.str()}, {"max", b.max_size.str()}}, {size_of(idx), idx});
  });
}

Report edge_systems_suite(const SuiteSpec& spec) {
  const PolygonTable t(static_cast<unsigned>(spec.param("N", 4)));
  return run_cases(spec, params_json({{"N", t.N}}), t.count(), [&](std::uint64_t i, CaseOutcome& out) {
    const auto idx = static_cast<std::uint32_t>(i);
    const PolygonFamily A = t.family(idx);
    const EdgeSystemResult r = edge_systems_min(A);
    bool system = true;
    for (Mask e : r.edges) system = system && popcount(e) == 2;
    for (Mask a : A) {
      bool hit = false;
      for (Mask e : r.edges) hit = hit || is_subset(e, a);
      system = system && hit;
    }
    if (!system || r.norm != t.norm(idx) || norm3(PolygonFamily(r.edges)).norm != r.norm)
      out.violation("norm3(A) is the least norm3 over edge systems of A",
                    Json{{"A", family_json(A.base())}, {"edges", family_json(r.edges)}, {"min", r.norm}, {"norm", t.norm(idx)}}, {size_of(idx), idx});
  });
}

}  // namespace

void add_coloring_suites(std::vector<SuiteInfo>& out) {
  auto add = [&](std::string name, std::string statement, SuiteFn fn) { out.push_back({std::move(name), std::move(statement), std::move(fn)}); };
  add("coloring.monotone", "A ⊆ B ⊆ P_4 implies norm3(A) <= norm3(B)", monotone_suite);
  add("coloring.oracle_equivalence", "the recursive definition equals ceil(log2 c) on every A ⊆ P_4", oracle_equivalence_suite);
  add("coloring.ge_chain", "norm3(A) >= n+1 implies norm3(A) >= n on the recursive definition", ge_chain_suite);
  add("coloring.split_union", "c(A u B) <= c(A) c(B) on P_4, tight for the rook construction", split_union_suite);
  add("coloring.triangle", "norm3(A u B) <= norm3(A) + norm3(B) on P_4", triangle_suite);
  add("coloring.psi_monotone", "norm3(A) <= norm3(psi_g(A)) for every built-in reducer on P_4", psi_monotone_suite);
  add("coloring.psi_injective", "the rank encoding is injective on nonempty subsets, N <= 6", psi_injective_suite);
  add("coloring.vertex_deletion", "deleting a vertex lowers norm3 by at most one on P_4", vertex_deletion_suite);
  add("coloring.star", "the star of any vertex has norm3 1, N <= 6", star_suite);
  add("coloring.universe_extension", "norm3 is unchanged from P_4 to P_5", universe_extension_suite);
  add("coloring.log_bound", "norm3(A) <= ceil(log2 N)", log_bound_suite);
  add("coloring.kgon", "k-gons split by exactly ceil(N/(k-1)) parts; stated formula compared, N <= 10", kgon_suite);
  add("coloring.size_bounds", "families of norm3 k have between min_size and max_size members", size_bounds_suite);
  add("coloring.edge_systems", "norm3(A) is attained by an edge system of A on P_4", edge_systems_suite);
}

}  // namespace normforge::detail
