#pragma once

#include <optional>

#include "normforge/combinatorics.hpp"
#include "normforge/setcore.hpp"

namespace normforge {

struct ExclusionParams {
  unsigned F;
  unsigned G;
  ExclusionParams(unsigned F, unsigned G);  // requires 0 < F < G <= 24
};

// F / (|G \ A| + 1)
ExactRatio norm1(const ExclusionParams& p, Mask A);

// G + 1 - F/k; equals |A| whenever k = norm1(A).
ExactRatio size_from_norm1(const ExclusionParams& p, const ExactRatio& k);

struct PartitionBounds {
  ExactRatio norm_a;
  ExactRatio norm_b;
  ExactRatio threshold;  // 2F/(G+2)
  bool holds() const;    // min <= threshold <= max
};

PartitionBounds partition_bounds(const ExclusionParams& p, Mask A, Mask B);

struct TriangleCounterexample {
  Mask A;
  Mask B;
  ExactRatio norm_a;
  ExactRatio norm_b;
  ExactRatio norm_union;
};

// A partition (A,B) of G with norm1(A u B) > norm1(A) + norm1(B). Tries the
// balanced split first. G < 3 is a domain error.
std::optional<TriangleCounterexample> triangle_counterexample(const ExclusionParams& p);

struct UnionBoundCheck {
  ExactRatio k;  // norm1(A)
  ExactRatio l;  // norm1(B)
  ExactRatio j;  // norm1(A u B)
  ExactRatio Q;  // F/k + F/l - G - 1
  std::optional<ExactRatio> bound;  // F/Q when Q > 0
  bool holds;                      // j <= F/Q, or Q <= 0
  bool reversed_holds;             // j >= F/Q, the direction as printed; true when Q <= 0
};

UnionBoundCheck union_bound_check(const ExclusionParams& p, Mask A, Mask B);

}  // namespace normforge
