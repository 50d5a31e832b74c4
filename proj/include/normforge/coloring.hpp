#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "normforge/combinatorics.hpp"
#include "normforge/setcore.hpp"

namespace normforge {

// Family whose members all have at least two elements.
class PolygonFamily {
 public:
  explicit PolygonFamily(Family base);
  PolygonFamily(unsigned universe, std::vector<Mask> members) : PolygonFamily(Family(universe, std::move(members))) {}
  const Family& base() const noexcept { return base_; }
  unsigned universe() const noexcept { return base_.universe(); }
  std::size_t size() const noexcept { return base_.size(); }
  bool empty() const noexcept { return base_.empty(); }
  auto begin() const { return base_.begin(); }
  auto end() const { return base_.end(); }
  friend bool operator==(const PolygonFamily&, const PolygonFamily&) = default;

 private:
  Family base_;
};

inline constexpr unsigned kSplitMaxUniverse = 16;
inline constexpr unsigned kOracleMaxUniverse = 10;

struct SplitWitness {
  Partition partition;
  unsigned parts_count() const { return static_cast<unsigned>(partition.size()); }
};

struct SplitResult {
  unsigned c;
  SplitWitness witness;
};

// Least number of parts of a partition of the universe leaving no member
// inside a single part. The witness is the first partition found at that count
// when vertices are coloured in order and a new part is opened only after all
// existing ones.
SplitResult splitting_number(const PolygonFamily& A);

// Decides whether A can be split by at most c parts.
bool splittable_by(const PolygonFamily& A, unsigned c);

unsigned ceil_log2(std::uint64_t c);

struct Norm3Result {
  unsigned norm;  // ceil(log2 c)
  SplitWitness witness;
};

Norm3Result norm3(const PolygonFamily& A);

// Literal recursive evaluation of "norm3(A) >= n" over all z of the universe.
bool norm3_ge_oracle(const PolygonFamily& A, unsigned n);
// Largest n with norm3_ge_oracle(A, n).
unsigned norm3_by_oracle(const PolygonFamily& A);

// f(a) = sum_i a_i N^i over the ascending elements of a.
BigCount rank_encode(Mask a, unsigned N);

class ReducerSpec {
 public:
  enum class Kind { lex_min_edge, lex_max_edge, table };

  static ReducerSpec lex_min_edge() { return ReducerSpec(Kind::lex_min_edge, {}); }
  static ReducerSpec lex_max_edge() { return ReducerSpec(Kind::lex_max_edge, {}); }
  // Polygon -> proper sub-polygon map; validated here.
  static ReducerSpec table(std::map<Mask, Mask> entries);

  Kind kind() const noexcept { return kind_; }
  // g(a); edges are fixed. A polygon missing from a table is a domain error.
  Mask apply(Mask a) const;

 private:
  ReducerSpec(Kind k, std::map<Mask, Mask> t) : kind_(k), table_(std::move(t)) {}
  Kind kind_;
  std::map<Mask, Mask> table_;
};

// Replace the member with the largest rank_encode value by its reduction.
PolygonFamily psi_step(const PolygonFamily& A, const ReducerSpec& g);

inline constexpr std::uint64_t kEdgeSystemBudget = 1000000;

struct EdgeSystemResult {
  unsigned norm;
  Family edges;
  std::uint64_t systems_examined;
};

// Minimum norm3 over edge systems of A with an attaining system.
EdgeSystemResult edge_systems_min(const PolygonFamily& A, std::uint64_t budget = kEdgeSystemBudget);

PolygonFamily all_kgons(unsigned N, unsigned k);
PolygonFamily star_family(unsigned N, unsigned v);
// Embeds A into a universe one larger.
PolygonFamily extend_universe(const PolygonFamily& A);

struct KgonReport {
  unsigned N;
  unsigned k;
  unsigned exact;          // splitting number by search
  unsigned ceil_value;     // ceil(N/(k-1))
  unsigned stated_value;    // min(ceil(N/(k-1)), floor(N/k)+1)
  Partition witness;
  bool matches_claim() const { return exact == stated_value; }
};

KgonReport kgon_analysis(unsigned N, unsigned k);

struct SizeBounds {
  BigCount min_size;  // C(2^{k-1}+1, 2)
  BigCount max_size;  // 2^N - 2^k 2^{N/2^k} + 2^k - 1, floored when 2^k does not divide N
  bool max_exact;
};

SizeBounds size_bounds(unsigned N, unsigned k);

// Cross edges between the n blocks of n consecutive vertices, and edges inside
// the blocks; N = n^2.
std::pair<PolygonFamily, PolygonFamily> rook_construction(unsigned n);

}  // namespace normforge
