#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "normforge/combinatorics.hpp"
#include "normforge/hall.hpp"
#include "normforge/setcore.hpp"

namespace normforge {

enum class NormId { counting = 0, exclusion = 1, subset = 2, coloring = 3, hall = 4 };

struct NormParams {
  unsigned F = 0;  // exclusion
  unsigned G = 0;  // exclusion
  unsigned n = 0;  // subset
};

// The set a norm is checked on: a subset of G (exclusion), a family of sets
// (counting, subset, coloring) or a set of total functions (hall).
using AxiomSubject = std::variant<Mask, Family, FnSet>;

inline constexpr std::size_t kAxiomExhaustiveLimit = 12;

struct AxiomFailure {
  std::string axiom;          // "monotone", "positive", "singleton"
  std::uint64_t smaller = 0;  // index subsets of the ground list
  std::uint64_t larger = 0;
  ExactRatio smaller_value;
  ExactRatio larger_value;
};

struct AxiomReport {
  std::size_t ground_size = 0;
  bool exhaustive = true;
  std::uint64_t checks = 0;
  bool monotone = true;
  bool positive = true;
  bool singleton = true;
  std::vector<AxiomFailure> failures;  // first few, in evaluation order
  bool all_hold() const { return monotone && positive && singleton; }
};

// Checks the norm axioms for `value`, a function of index subsets of a ground
// list of size m: monotone along B ⊆ C, and when m > 1 positive on the whole
// list and at most 1 on singletons. Exhaustive for m <= 12, otherwise
// `samples` seeded random pairs.
AxiomReport check_axioms(std::size_t m, const std::function<ExactRatio(std::uint64_t)>& value, std::uint64_t seed = 1,
                         std::uint64_t samples = 20000);

AxiomReport axiom_check(NormId id, const NormParams& params, const AxiomSubject& A, std::uint64_t seed = 1);

std::string norm_name(NormId id);

}  // namespace normforge
