#include "normforge/subset_norm.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "normforge/errors.hpp"

namespace normforge {

SubsetNormParams::SubsetNormParams(unsigned n_, unsigned G_) : n(n_), G(G_), H(0) {
  if (n == 0 || G == 0) throw DomainError("subset norm needs positive n and G");
  if (G > kMaxUniverse) throw DomainError("G above the universe limit");
  if (n >= 32 || G % (1u << n) != 0) throw DomainError("2^n must divide G");
  H = G >> n;
}

Family universe_X(const SubsetNormParams& p, std::uint64_t budget) {
  const BigCount size = binomial(p.G, p.H);
  if (size > BigCount(budget)) throw BudgetError("|X| = " + size.str() + " exceeds budget " + std::to_string(budget));
  std::vector<Mask> out;
  for_each_k_subset(p.G, p.H, [&](Mask x) { out.push_back(x); });
  return Family(p.G, std::move(out));
}

Norm2Result norm2(const SubsetNormParams& p, const Family& A) {
  if (A.universe() != p.G) throw DomainError("family universe differs from G");
  for (Mask a : A)
    if (popcount(a) != p.H) throw DomainError("member " + mask_to_string(a) + " does not have size H=" + std::to_string(p.H));
  for (unsigned s = 0; s <= p.H + 1; ++s) {
    std::optional<Mask> found;
    for_each_k_subset(p.G, s, [&](Mask x) {
      if (found) return;
      for (Mask a : A)
        if (is_subset(x, a)) return;
      found = x;
    });
    if (found) return {s, *found};
  }
  throw DomainError("no witness found");  // unreachable for valid input: any (H+1)-set works
}

Family localize(const Family& A, unsigned l) {
  if (l >= A.universe()) throw DomainError("point outside the universe");
  std::vector<Mask> out;
  for (Mask a : A)
    if (a & bit(l)) out.push_back(a);
  return Family(A.universe(), std::move(out));
}

namespace {

void check_k(const SubsetNormParams& p, unsigned k) {
  if (k > p.H) throw DomainError("k exceeds H");
}

}  // namespace

ExactRatio ratio_lower_bound(const SubsetNormParams& p, unsigned k) {
  check_k(p, k);
  return ExactRatio::from_counts(factorial(p.G - p.H) * factorial(p.H - k), factorial(p.G - k));
}

ExactRatio ratio_product(const SubsetNormParams& p, unsigned k) {
  check_k(p, k);
  ExactRatio prod(1);
  for (unsigned i = 0; i < k; ++i) prod = prod * ExactRatio(BigInt(p.H - i), BigInt(p.G - i));
  return prod;
}

ExactRatio ratio_upper_bound(const SubsetNormParams& p, unsigned k) { return ExactRatio(1) - ratio_product(p, k); }

Family extremal_family(const SubsetNormParams& p, unsigned k) {
  if (k < 1) throw DomainError("extremal family needs k >= 1");
  check_k(p, k);
  const Mask first_k = full_mask(k);
  std::vector<Mask> out;
  for_each_k_subset(p.G, p.H, [&](Mask x) {
    if ((x & first_k) != first_k) out.push_back(x);
  });
  return Family(p.G, std::move(out));
}

double stirling_ratio_bound(const SubsetNormParams& p, unsigned k) {
  if (!(0 < k && k < p.H && p.H < p.G)) throw DomainError("Stirling bound needs 0 < k < H < G");
  const double gh = p.G - p.H, hk = p.H - k, gk = p.G - k;
  const double log_value = std::log(2.0 * M_PI) - 1.0 + 0.5 * (std::log(gh) + std::log(hk) - std::log(gk)) +
                           gh * std::log(gh) + hk * std::log(hk) - gk * std::log(gk);
  return std::exp(log_value);
}

DensityRefutation density_refutation_check(const SubsetNormParams& p, unsigned k) {
  if (k < 2) throw DomainError("the refutation needs k >= 2");
  check_k(p, k);
  const Family A = extremal_family(p, k);
  const BigCount X = binomial(p.G, p.H);
  const BigCount size(A.size());
  const ExactRatio threshold(BigInt(1), BigInt(1) << (p.n * k));
  return DensityRefutation{p.n,
                    p.G,
                    p.H,
                    k,
                    norm2(p, A).k,
                    size,
                    X,
                    ExactRatio::from_counts(size, X),
                    ratio_upper_bound(p, k),
                    ratio_product(p, k),
                    threshold,
                    ExactRatio(1) - threshold};
}

SubsetNormTable::SubsetNormTable(const SubsetNormParams& p) : params_(p) {
  X_ = universe_X(p, 31).members();
  for (unsigned s = 0; s <= p.H + 1; ++s) {
    for_each_k_subset(p.G, s, [&](Mask x) {
      std::uint32_t in = 0;
      for (std::size_t i = 0; i < X_.size(); ++i)
        if (is_subset(x, X_[i])) in |= std::uint32_t{1} << i;
      containing_.emplace_back(x, in);
    });
  }
}

unsigned SubsetNormTable::norm(std::uint32_t family_index_mask) const {
  for (const auto& [x, in] : containing_)
    if ((in & family_index_mask) == 0) return popcount(x);
  return params_.H + 1;
}

Family SubsetNormTable::family(std::uint32_t family_index_mask) const {
  std::vector<Mask> out;
  for (std::size_t i = 0; i < X_.size(); ++i)
    if (family_index_mask & (std::uint32_t{1} << i)) out.push_back(X_[i]);
  return Family(params_.G, std::move(out));
}

}  // namespace normforge
