#pragma once

#include <cstdint>
#include <vector>

#include "normforge/combinatorics.hpp"
#include "normforge/setcore.hpp"

namespace normforge {

struct SubsetNormParams {
  unsigned n;
  unsigned G;
  unsigned H;
  SubsetNormParams(unsigned n, unsigned G);  // 2^n | G, G <= 24
};

inline constexpr std::uint64_t kUniverseXBudget = 1000000;

// All H-subsets of G.
Family universe_X(const SubsetNormParams& p, std::uint64_t budget = kUniverseXBudget);

struct Norm2Result {
  unsigned k;
  Mask witness;  // least |x|, then least numeric value, with x not inside any member
};

Norm2Result norm2(const SubsetNormParams& p, const Family& A);

// A(l) = members containing l.
Family localize(const Family& A, unsigned l);

// (G-H)!(H-k)!/(G-k)!
ExactRatio ratio_lower_bound(const SubsetNormParams& p, unsigned k);
// 1 - prod_{i<k} (H-i)/(G-i)
ExactRatio ratio_upper_bound(const SubsetNormParams& p, unsigned k);
// prod_{i<k} (H-i)/(G-i)
ExactRatio ratio_product(const SubsetNormParams& p, unsigned k);

// Union over a < k of {x in X : a not in x}.
Family extremal_family(const SubsetNormParams& p, unsigned k);

// Closed-form Stirling estimate of the lower ratio bound; needs 0 < k < H < G.
double stirling_ratio_bound(const SubsetNormParams& p, unsigned k);

struct DensityRefutation {
  unsigned n, G, H, k;
  unsigned norm;              // norm2 of the extremal family
  BigCount family_size;
  BigCount universe_size;
  ExactRatio ratio;           // |A*|/|X|
  ExactRatio formula_ratio;   // 1 - product
  ExactRatio product;         // prod_{i<k} (H-i)/(G-i)
  ExactRatio threshold;       // 2^{-nk}
  ExactRatio lemma_bound;     // 1 - 2^{-nk}
  bool norm_is_k() const { return norm == k; }
  bool ratio_matches() const { return ratio == formula_ratio; }
  bool product_below() const { return product < threshold; }
  bool ratio_above() const { return ratio > lemma_bound; }
  bool refutes() const { return norm_is_k() && ratio_matches() && product_below() && ratio_above(); }
};

DensityRefutation density_refutation_check(const SubsetNormParams& p, unsigned k);

// Norms of subfamilies of X addressed by index bitmasks, for exhaustive sweeps
// with |X| <= 31.
class SubsetNormTable {
 public:
  explicit SubsetNormTable(const SubsetNormParams& p);
  const SubsetNormParams& params() const noexcept { return params_; }
  const std::vector<Mask>& universe() const noexcept { return X_; }
  std::size_t universe_size() const noexcept { return X_.size(); }
  unsigned norm(std::uint32_t family_index_mask) const;
  Family family(std::uint32_t family_index_mask) const;

 private:
  SubsetNormParams params_;
  std::vector<Mask> X_;
  // Candidate witnesses in (size, value) order with the index mask of members containing each.
  std::vector<std::pair<Mask, std::uint32_t>> containing_;
};

}  // namespace normforge
