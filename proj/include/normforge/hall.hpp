#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normforge/combinatorics.hpp"
#include "normforge/setcore.hpp"

namespace normforge {

inline constexpr unsigned kMaxFnUniverse = 16;
inline constexpr unsigned kDeltaMaxUniverse = 12;
inline constexpr unsigned kHnMaxFamily = 15;

// Partial 0/1 function: defined on dom, equal to 1 exactly on ones.
struct PartialFn {
  Mask dom = 0;
  Mask ones = 0;

  PartialFn() = default;
  PartialFn(Mask d, Mask o);  // ones must lie inside dom
  static PartialFn total(unsigned N, Mask ones) { return PartialFn(full_mask(N), ones); }

  unsigned size() const noexcept { return popcount(dom); }
  bool is_total(unsigned N) const noexcept { return dom == full_mask(N); }
  // this is a subfunction of other
  bool subfunction_of(const PartialFn& other) const noexcept {
    return is_subset(dom, other.dom) && (other.ones & dom) == ones;
  }
  bool extended_by(Mask total_ones) const noexcept { return (total_ones & dom) == ones; }
  PartialFn restrict_to(Mask z) const { return PartialFn(dom & z, ones & z); }

  friend bool operator==(const PartialFn&, const PartialFn&) = default;
  // canonical order: domain size, domain value, ones value
  friend bool operator<(const PartialFn& a, const PartialFn& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.dom != b.dom) return a.dom < b.dom;
    return a.ones < b.ones;
  }
};

std::string pfn_to_string(const PartialFn& s);  // {0↦1,3↦0}

// Set of total functions on {0..N-1}, each stored as its 1-set, numeric order.
class FnSet {
 public:
  explicit FnSet(unsigned N, std::vector<Mask> members = {});
  static FnSet full(unsigned N);
  // Bit i of index_bits selects the function whose 1-set has value i (N <= 6).
  static FnSet from_index_bits(unsigned N, std::uint64_t index_bits);

  unsigned N() const noexcept { return N_; }
  const std::vector<Mask>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Mask f) const;
  bool is_full() const noexcept { return members_.size() == (std::size_t{1} << N_); }
  std::uint64_t index_bits() const;  // N <= 6
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  friend bool operator==(const FnSet&, const FnSet&) = default;

 private:
  unsigned N_;
  std::vector<Mask> members_;
};

// Deduplicated family of partial functions in canonical order.
class FnFamily {
 public:
  explicit FnFamily(unsigned N, std::vector<PartialFn> members = {});
  unsigned N() const noexcept { return N_; }
  const std::vector<PartialFn>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const PartialFn& s) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  friend bool operator==(const FnFamily&, const FnFamily&) = default;

 private:
  unsigned N_;
  std::vector<PartialFn> members_;
};

FnFamily family_union(const FnFamily& a, const FnFamily& b);

// Total function from a string with index 0 leftmost, e.g. "0110".
Mask fn_from_string(std::string_view bits);
std::string fn_to_string(Mask ones, unsigned N);

// [σ]
FnSet cylinder(const PartialFn& s, unsigned N);
// σ1 ∪ σ2 when they agree on the common domain.
std::optional<PartialFn> cylinder_meet(const PartialFn& a, const PartialFn& b);
bool meets(const PartialFn& s, const FnSet& A);

// Minimal partial functions whose cylinders avoid A.
FnFamily delta(const FnSet& A);
// Total functions extending no member of δ.
FnSet dset(const FnFamily& d);
// Every member of a has a subfunction in b.
bool preceq(const FnFamily& a, const FnFamily& b);

// Hall number over subfamilies; k ranges over 0..N.
unsigned hn(const FnFamily& d);

// One k-subset of the domain per member, pairwise disjoint.
struct Selector {
  std::vector<std::pair<PartialFn, Mask>> assignment;
  unsigned k = 0;
};

std::optional<Selector> find_selector(const FnFamily& d, unsigned k);

struct HallWitness {
  FnFamily refined;  // pairwise disjoint domains of size k; each member of δ extends one
  unsigned k;
};

struct HallResult {
  unsigned value;  // k + 1
  HallWitness witness;
};

HallResult hall_norm_HN(const FnFamily& d);
unsigned hall_norm4(const FnSet& A);

// Members with domain inside Z.
FnFamily restrict_delta(const FnFamily& d, Mask Z);

struct LRSplit {
  FnFamily L;
  FnFamily R;
};

LRSplit lr_split(const FnFamily& d, Mask Z);

// Relabels a family whose domains lie in Z onto {0..|Z|-1}, and back.
FnFamily compress_family(const FnFamily& d, Mask Z);
FnSet project(const FnSet& A, Mask Z);  // {f↾Z : f in A}, relabeled

// {f ∪ g}: A1 over N, A2 over the next M-N points (given relabeled).
FnSet glue(const FnSet& A1, const FnSet& A2);

struct CutResult {
  FnSet A_L;      // over |Z| points
  FnSet A_R;      // over N-|Z| points
  FnFamily delta_star;
  FnFamily L;
  FnFamily R;
  bool degenerate;  // Z empty or full
};

CutResult cut(const FnSet& A, Mask Z);
// The set {f : f↾Z in A_L and f↾(N\Z) in A_R} over N.
FnSet recombine(const CutResult& c, unsigned N, Mask Z);

struct EmptyRReport {
  unsigned HN_delta;
  unsigned HN_L;
  ExactRatio bound;  // HN(δ) - N/2
  bool holds() const { return ExactRatio(HN_L) >= bound; }
  bool equality() const { return ExactRatio(HN_L) == bound; }
};

EmptyRReport empty_R_bound_check(const FnFamily& d, Mask Z);

// All partial functions extending rho (a cone).
FnFamily cone(const PartialFn& rho, unsigned N);

// 2^N - sum_{j=1..m} (-1)^{j-1} C(m,j) 2^{N-jk}, m = floor(N/k).
BigCount hall_size_lower_bound(unsigned N, unsigned k);

// JSON codecs. FnSet: {"N":4,"functions":["0110",...]}; FnFamily:
// {"N":4,"pfns":[{"0":1,"3":0},...]}. Emit appends LF.
FnSet parse_fnset(std::string_view text);
std::string emit_fnset(const FnSet& A);
FnFamily parse_fnfamily(std::string_view text);
std::string emit_fnfamily(const FnFamily& d);
std::string emit_pfn(const PartialFn& s);           // {"0":1,"3":0}
std::string emit_pfn_list(const FnFamily& d);       // [{...},...]
std::string emit_function_list(const FnSet& A);     // ["0110",...]

}  // namespace normforge
