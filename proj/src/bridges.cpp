#include "normforge/bridges.hpp"

#include <algorithm>

#include "normforge/errors.hpp"

namespace normforge {

SubsetBridgeReport subset_bridge_check(unsigned n, unsigned N, const Family& B) {
  const SubsetNormParams p(n, N);
  if (B.universe() != N) throw DomainError("family universe differs from N");
  const unsigned k = norm2(p, B).k;
  FnSet A(N, B.members());
  const unsigned v = hall_norm4(A);
  return {k, std::move(A), v};
}

Family pstar(const FnSet& A, unsigned n) {
  if (n >= 32 || A.N() % (1u << n) != 0) throw DomainError("2^n must divide N");
  const unsigned H = A.N() >> n;
  std::vector<Mask> out;
  for (Mask f : A)
    if (popcount(f) == H) out.push_back(f);
  return Family(A.N(), std::move(out));
}

namespace {

std::optional<PstarCounterexample> pstar_violation(const FnSet& A, const std::vector<unsigned>& ns) {
  const FnFamily d = delta(A);
  for (unsigned n : ns) {
    const Family ps = pstar(A, n);
    if (ps.empty()) continue;
    for (const auto& s : d)
      for (Mask p : ps)
        if (is_subset(profile(s), p)) return PstarCounterexample{A, n, s, p};
  }
  return std::nullopt;
}

}  // namespace

PstarScanReport pstar_claim_scan(unsigned N, std::uint64_t budget, bool stop_at_first) {
  if (N < 1 || N > 6) throw DomainError("P* scan needs 1 <= N <= 6");
  std::vector<unsigned> ns;
  for (unsigned n = 1; (1u << n) <= N; ++n)
    if (N % (1u << n) == 0) ns.push_back(n);
  PstarScanReport rep;
  rep.N = N;
  const unsigned total = 1u << N;
  for (unsigned size = 0; size <= total; ++size) {
    // k-subsets of the 2^N functions in increasing index order
    const std::uint64_t range = total == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
    const std::uint64_t low = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    const std::uint64_t last = size == 0 ? 0 : range ^ (range >> size);
    for (std::uint64_t x = low;; x = next_same_popcount(x)) {
      if (rep.sets_examined >= budget) return rep;
      ++rep.sets_examined;
      if (auto v = pstar_violation(FnSet::from_index_bits(N, x), ns)) {
        ++rep.violating_sets;
        if (!rep.first) rep.first = v;
        if (stop_at_first) return rep;
      }
      if (x == last) break;
    }
  }
  rep.exhausted = true;
  return rep;
}

PolygonFamily pplus(const FnSet& A) {
  std::vector<Mask> out;
  for (Mask f : A)
    if (popcount(f) >= 2) out.push_back(f);
  return PolygonFamily(A.N(), std::move(out));
}

std::vector<Mask> edge_lemma_missing(const PartialFn& s, unsigned N) {
  const PolygonFamily P = pplus(dset(FnFamily(N, {s})));
  std::vector<Mask> missing;
  for_each_k_subset(N, 2, [&](Mask e) {
    if (is_subset(e, s.dom) && e != profile(s) && !P.base().contains(e)) missing.push_back(e);
  });
  return missing;
}

std::optional<PartialFn> common_subfunction(const FnFamily& d) {
  if (d.empty()) return std::nullopt;
  Mask dom = d.members().front().dom;
  const Mask ones = d.members().front().ones;
  for (const auto& s : d) dom &= s.dom & ~(s.ones ^ ones);
  return PartialFn(dom, ones & dom);
}

PplusReport pplus_bounds_check(const FnSet& A) {
  const unsigned N = A.N();
  if (N > 10) throw BudgetError("P+ bounds check limited to N <= 10");
  const PolygonFamily P = pplus(A);
  const FnFamily d = delta(A);
  PplusReport r{};
  r.N = N;
  r.splitting = splitting_number(P).c;
  r.norm4 = hall_norm_HN(d).value;
  // With Δ(A) empty any σ qualifies; the total one gives the strongest claim.
  r.sigma = common_subfunction(d).value_or(PartialFn::total(N, 0));
  r.i_holds = r.splitting + 1 >= r.sigma.size();
  // norm4 = k + 2 >= N/2 + 1, i.e. 2*norm4 >= N + 2
  r.ii_applies = r.norm4 >= 2 && 2 * r.norm4 >= N + 2;
  const unsigned k = r.norm4 >= 2 ? r.norm4 - 2 : 0;
  r.ii_holds = !r.ii_applies || r.splitting >= k;
  r.ii_corrected_holds = !(r.norm4 >= 2 && 2 * (k + 1) > N) || r.splitting >= k;
  r.iii_corrected_holds = true;
  for (Mask p = 0; p <= full_mask(N); ++p) {
    bool blocked = true;
    for (Mask q : P)
      if (is_subset(p, q)) {
        blocked = false;
        break;
      }
    if (blocked && r.norm4 > popcount(p) + 1) {
      r.iii_failures.push_back(p);
      if (popcount(p) >= 2) r.iii_corrected_holds = false;
    }
    if (p == full_mask(N)) break;
  }
  r.corollary_n = 0;
  for (Mask q : P) r.corollary_n = std::max(r.corollary_n, popcount(q));
  r.corollary_holds = r.norm4 <= r.corollary_n + 1;
  r.corollary_corrected_holds = r.norm4 <= std::min(N + 1, std::max(r.corollary_n, 1u) + 2);
  return r;
}

FnSet weight_class(unsigned N, unsigned w) {
  std::vector<Mask> out;
  for_each_k_subset(N, w, [&](Mask f) { out.push_back(f); });
  return FnSet(N, std::move(out));
}

FnSet two_block_construction(unsigned N) {
  const unsigned h = N / 2;
  if (h == 0) throw DomainError("two-block construction needs N >= 2");
  return dset(FnFamily(N, {PartialFn(full_mask(h), 0), PartialFn(full_mask(h) << h, 0)}));
}

std::vector<ClosingInstance> closing_instances() {
  std::vector<ClosingInstance> out;
  auto add = [&](std::string name, FnSet A) {
    const unsigned n3 = norm3(pplus(A)).norm;
    const unsigned n4 = hall_norm4(A);
    out.push_back({std::move(name), std::move(A), n3, n4});
  };
  add("weight-2 functions, N=8", weight_class(8, 2));
  add("two zero blocks, N=8", two_block_construction(8));
  return out;
}

}  // namespace normforge
