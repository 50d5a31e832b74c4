#include "normforge/exclusion.hpp"

#include "normforge/errors.hpp"

namespace normforge {

ExclusionParams::ExclusionParams(unsigned F_, unsigned G_) : F(F_), G(G_) {
  if (F == 0 || F >= G) throw DomainError("exclusion norm needs 0 < F < G");
  if (G > kMaxUniverse) throw DomainError("G above the universe limit");
}

namespace {

void check_within(const ExclusionParams& p, Mask A) {
  if (!is_subset(A, full_mask(p.G))) throw DomainError("set " + mask_to_string(A) + " not inside G");
}

}  // namespace

ExactRatio norm1(const ExclusionParams& p, Mask A) {
  check_within(p, A);
  return ExactRatio(BigInt(p.F), BigInt(p.G - popcount(A) + 1));
}

ExactRatio size_from_norm1(const ExclusionParams& p, const ExactRatio& k) {
  if (k <= ExactRatio(0)) throw DomainError("norm value must be positive");
  return ExactRatio(p.G + 1) - ExactRatio(p.F) / k;
}

bool PartitionBounds::holds() const {
  const auto& lo = norm_a < norm_b ? norm_a : norm_b;
  const auto& hi = norm_a < norm_b ? norm_b : norm_a;
  return lo <= threshold && threshold <= hi;
}

PartitionBounds partition_bounds(const ExclusionParams& p, Mask A, Mask B) {
  check_within(p, A);
  check_within(p, B);
  if ((A & B) != 0 || (A | B) != full_mask(p.G)) throw DomainError("A and B do not partition G");
  return {norm1(p, A), norm1(p, B), ExactRatio(BigInt(2 * p.F), BigInt(p.G + 2))};
}

std::optional<TriangleCounterexample> triangle_counterexample(const ExclusionParams& p) {
  if (p.G < 3) throw DomainError("triangle counterexample needs G >= 3");
  const Mask full = full_mask(p.G);
  auto probe = [&](Mask A) -> std::optional<TriangleCounterexample> {
    const Mask B = full & ~A;
    TriangleCounterexample t{A, B, norm1(p, A), norm1(p, B), norm1(p, full)};
    if (t.norm_union > t.norm_a + t.norm_b) return t;
    return std::nullopt;
  };
  if (auto t = probe(full_mask(p.G / 2))) return t;
  for (Mask A = 0; A <= full; ++A)
    if (auto t = probe(A)) return t;
  return std::nullopt;
}

UnionBoundCheck union_bound_check(const ExclusionParams& p, Mask A, Mask B) {
  UnionBoundCheck out{norm1(p, A), norm1(p, B), norm1(p, A | B), ExactRatio(0), std::nullopt, true, true};
  const ExactRatio F(p.F);
  out.Q = F / out.k + F / out.l - ExactRatio(p.G + 1);
  if (out.Q > ExactRatio(0)) {
    out.bound = F / out.Q;
    out.holds = out.j <= *out.bound;
    out.reversed_holds = out.j >= *out.bound;
  }
  return out;
}

}  // namespace normforge
