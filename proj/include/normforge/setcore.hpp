#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "normforge/combinatorics.hpp"

namespace normforge {

using Mask = std::uint32_t;

inline constexpr unsigned kMaxUniverse = 24;

inline constexpr Mask full_mask(unsigned n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
inline constexpr unsigned popcount(Mask m) { return static_cast<unsigned>(std::popcount(m)); }
inline constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline constexpr Mask bit(unsigned i) { return Mask{1} << i; }

// Next value with the same popcount in increasing numeric order (Gosper).
inline constexpr std::uint64_t next_same_popcount(std::uint64_t x) {
  std::uint64_t c = x & (~x + 1);
  std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Calls fn on every k-subset of {0..n-1} in increasing numeric order.
template <class Fn>
void for_each_k_subset(unsigned n, unsigned k, Fn&& fn) {
  if (k > n) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit; x = next_same_popcount(x)) fn(static_cast<Mask>(x));
}

std::vector<unsigned> mask_elements(Mask m);
Mask elements_mask(const std::vector<unsigned>& elements);
std::string mask_to_string(Mask m);  // "{0,2}"

// Relabel the bits of x that lie in z onto an initial segment, preserving order.
Mask compress_bits(Mask x, Mask z);
// Inverse of compress_bits: spread the low popcount(z) bits of x onto z.
Mask expand_bits(Mask x, Mask z);

// Universe {0..size-1}.
class Universe {
 public:
  explicit Universe(unsigned size);
  unsigned size() const noexcept { return size_; }
  Mask full() const noexcept { return full_mask(size_); }
  bool contains(Mask m) const noexcept { return is_subset(m, full()); }
  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  unsigned size_;
};

// Deduplicated family of subsets, stored in increasing numeric order.
class Family {
 public:
  explicit Family(unsigned universe, std::vector<Mask> members = {});

  unsigned universe() const noexcept { return universe_; }
  const std::vector<Mask>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Mask m) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  unsigned universe_;
  std::vector<Mask> members_;
};

// Parts ordered by least element. Validated on construction against a universe.
class Partition {
 public:
  Partition(unsigned universe, std::vector<Mask> parts);
  unsigned universe() const noexcept { return universe_; }
  const std::vector<Mask>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool splits(const Family& A) const;  // no member inside a single part
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  unsigned universe_;
  std::vector<Mask> parts_;
};

Family restrict(const Family& A, Mask z);
BigCount counting_norm(const Family& A);
Family family_union(const Family& A, const Family& B);
// Reinterprets A over a universe of a different size (members must fit).
Family with_universe(const Family& A, unsigned universe);

// Canonical JSON: {"universe":N,"sets":[[...],...]} with sets sorted by
// (size, lexicographic) and ascending elements. emit appends a trailing LF.
Family parse_family(std::string_view text);
std::string emit_family(const Family& A);
// Sets array only, same ordering, no newline: [[0,1],[2,3]]
std::string emit_sets(const Family& A);
std::string emit_mask(Mask m);  // [0,2]
std::string emit_partition(const Partition& p);

// Members in (size, lexicographic) order, the order used for emit.
std::vector<Mask> size_lex_order(std::vector<Mask> members);

}  // namespace normforge
