#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normforge/coloring.hpp"
#include "normforge/hall.hpp"
#include "normforge/subset_norm.hpp"

namespace normforge {

// 1-positions of σ.
inline Mask profile(const PartialFn& s) { return s.ones; }
inline PartialFn profile_inverse(Mask p, unsigned N) { return PartialFn::total(N, p); }

struct SubsetBridgeReport {
  unsigned k;      // norm2 of B over ground set N
  FnSet A;         // total functions with profile in B
  unsigned norm4;
  bool holds() const { return norm4 <= k + 1; }
};

// B must consist of H-subsets of N, H = N/2^n.
SubsetBridgeReport subset_bridge_check(unsigned n, unsigned N, const Family& B);

// Profiles of members with exactly H = N/2^n ones.
Family pstar(const FnSet& A, unsigned n);

struct PstarCounterexample {
  FnSet A;
  unsigned n;
  PartialFn sigma;
  Mask p;
};

struct PstarScanReport {
  unsigned N;
  std::uint64_t sets_examined = 0;
  std::uint64_t violating_sets = 0;
  std::optional<PstarCounterexample> first;
  bool exhausted = false;  // every A was examined
};

// Scans A ⊆ ^N 2 by size then canonical order, over every n with 2^n | N.
PstarScanReport pstar_claim_scan(unsigned N, std::uint64_t budget, bool stop_at_first = false);

PolygonFamily pplus(const FnSet& A);

// Every edge of dom(σ) other than P(σ) must lie in P+(D({σ})); returns the missing ones.
std::vector<Mask> edge_lemma_missing(const PartialFn& s, unsigned N);

// Largest σ below every member of δ (points where all members are defined and agree).
std::optional<PartialFn> common_subfunction(const FnFamily& d);

struct PplusReport {
  unsigned N;
  unsigned splitting;           // splitting number of P+(A)
  unsigned norm4;
  PartialFn sigma;              // common subfunction used for (i)
  bool i_holds;                 // splitting >= |σ| - 1
  bool ii_applies;              // norm4 = k+2 >= N/2 + 1
  bool ii_holds;                // splitting >= k, when it applies
  bool ii_corrected_holds;      // same, required only when k+1 > N/2
  std::vector<Mask> iii_failures;          // p with no superset in P+ but norm4 > |p|+1
  bool iii_corrected_holds;                // no failure with |p| >= 2
  unsigned corollary_n;                    // largest member size of P+(A)
  bool corollary_holds;                    // norm4 <= n + 1
  bool corollary_corrected_holds;          // norm4 <= min(N+1, max(n,1) + 2)
  bool hard_holds() const { return i_holds && ii_corrected_holds && iii_corrected_holds && corollary_corrected_holds; }
  bool literal_holds() const { return i_holds && ii_holds && iii_failures.empty() && corollary_holds; }
};

PplusReport pplus_bounds_check(const FnSet& A);

FnSet weight_class(unsigned N, unsigned w);
// D(δ) for two all-zero partial functions on disjoint blocks of floor(N/2) points.
FnSet two_block_construction(unsigned N);

struct ClosingInstance {
  std::string name;
  FnSet A;
  unsigned norm3;  // of P+(A)
  unsigned norm4;
};

std::vector<ClosingInstance> closing_instances();

}  // namespace normforge
