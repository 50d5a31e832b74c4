#pragma once

#include <cstdint>

namespace normforge {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Counter-based stream keyed by (seed, case index): case i draws the same
// values no matter which worker runs it or in what order.
class CaseRng {
 public:
  CaseRng(std::uint64_t seed, std::uint64_t index) : key_(splitmix64(seed ^ splitmix64(index ^ 0x5851f42d4c957f2dull))) {}

  std::uint64_t next() { return splitmix64(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  // Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  std::uint64_t bits(unsigned width) { return width >= 64 ? next() : next() & ((std::uint64_t{1} << width) - 1); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace normforge
