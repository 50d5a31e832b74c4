#include "normforge/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "normforge/errors.hpp"

namespace normforge {

PolygonFamily::PolygonFamily(Family base) : base_(std::move(base)) {
  for (Mask a : base_)
    if (popcount(a) < 2) throw DomainError("member " + mask_to_string(a) + " has fewer than two elements");
}

namespace {

class Splitter {
 public:
  explicit Splitter(const PolygonFamily& A) : N_(A.universe()), by_max_(A.universe()), colours_(A.universe(), 0) {
    for (Mask a : A) by_max_[31 - std::countl_zero(a)].push_back(a);
  }

  std::optional<Partition> run(unsigned c) {
    if (N_ == 0) return c >= 1 ? std::optional<Partition>(Partition(0, {})) : std::nullopt;
    std::fill(colours_.begin(), colours_.end(), 0);
    used_ = 0;
    if (!dfs(0, c)) return std::nullopt;
    return Partition(N_, std::vector<Mask>(colours_.begin(), colours_.begin() + used_));
  }

 private:
  bool dfs(unsigned v, unsigned c) {
    if (v == N_) return true;
    const unsigned limit = std::min(used_ + 1, c);
    for (unsigned col = 0; col < limit; ++col) {
      colours_[col] |= bit(v);
      bool ok = true;
      for (Mask a : by_max_[v])
        if (is_subset(a, colours_[col])) {
          ok = false;
          break;
        }
      if (ok) {
        const unsigned saved = used_;
        used_ = std::max(used_, col + 1);
        if (dfs(v + 1, c)) return true;
        used_ = saved;
      }
      colours_[col] &= ~bit(v);
    }
    return false;
  }

  unsigned N_;
  std::vector<std::vector<Mask>> by_max_;
  std::vector<Mask> colours_;
  unsigned used_ = 0;
};

void check_split_budget(const PolygonFamily& A) {
  if (A.universe() > kSplitMaxUniverse)
    throw BudgetError("splitting search limited to universes of size " + std::to_string(kSplitMaxUniverse));
}

}  // namespace

bool splittable_by(const PolygonFamily& A, unsigned c) {
  check_split_budget(A);
  if (c == 0) return false;
  return Splitter(A).run(c).has_value();
}

SplitResult splitting_number(const PolygonFamily& A) {
  check_split_budget(A);
  Splitter s(A);
  for (unsigned c = 1;; ++c) {
    if (auto p = s.run(c)) return {c, SplitWitness{*p}};
    if (c > A.universe()) throw DomainError("family cannot be split");  // unreachable: singletons split any P_N family
  }
}

unsigned ceil_log2(std::uint64_t c) {
  if (c <= 1) return 0;
  return 64 - static_cast<unsigned>(std::countl_zero(c - 1));
}

Norm3Result norm3(const PolygonFamily& A) {
  SplitResult s = splitting_number(A);
  return {ceil_log2(s.c), std::move(s.witness)};
}

namespace {

class Oracle {
 public:
  explicit Oracle(unsigned N) : N_(N) {}

  bool ge(const std::vector<Mask>& A, unsigned n) {
    if (n == 0) return true;
    if (n == 1) return !A.empty();
    auto key = std::make_pair(A, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = true;
    const Mask full = full_mask(N_);
    for (Mask z = 0; z <= full && result; ++z) {
      if (!ge(restricted(A, z), n - 1) && !ge(restricted(A, full & ~z), n - 1)) result = false;
      if (z == full) break;
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  static std::vector<Mask> restricted(const std::vector<Mask>& A, Mask z) {
    std::vector<Mask> out;
    for (Mask a : A)
      if (is_subset(a, z)) out.push_back(a);
    return out;
  }

  unsigned N_;
  std::map<std::pair<std::vector<Mask>, unsigned>, bool> memo_;
};

}  // namespace

bool norm3_ge_oracle(const PolygonFamily& A, unsigned n) {
  if (A.universe() > kOracleMaxUniverse)
    throw BudgetError("recursive oracle limited to universes of size " + std::to_string(kOracleMaxUniverse));
  return Oracle(A.universe()).ge(A.base().members(), n);
}

unsigned norm3_by_oracle(const PolygonFamily& A) {
  if (A.universe() > kOracleMaxUniverse)
    throw BudgetError("recursive oracle limited to universes of size " + std::to_string(kOracleMaxUniverse));
  Oracle o(A.universe());
  unsigned n = 0;
  while (o.ge(A.base().members(), n + 1)) ++n;
  return n;
}

BigCount rank_encode(Mask a, unsigned N) {
  if (a == 0) throw DomainError("rank encoding is undefined on the empty set");
  if (!is_subset(a, full_mask(N))) throw DomainError("set outside the universe");
  BigCount total(0);
  std::uint64_t i = 0;
  for (unsigned e : mask_elements(a)) total += BigCount(e) * power(N, i++);
  return total;
}

ReducerSpec ReducerSpec::table(std::map<Mask, Mask> entries) {
  for (const auto& [a, g] : entries) {
    if (popcount(a) < 3) throw DomainError("reducer table key " + mask_to_string(a) + " is not a polygon");
    if (!is_subset(g, a) || g == a || popcount(g) < 2)
      throw DomainError("reducer maps " + mask_to_string(a) + " to " + mask_to_string(g) + ", not a proper sub-polygon");
  }
  return ReducerSpec(Kind::table, std::move(entries));
}

Mask ReducerSpec::apply(Mask a) const {
  if (popcount(a) < 2) throw DomainError("reducer applied to a non-member of P");
  if (popcount(a) == 2) return a;
  switch (kind_) {
    case Kind::lex_min_edge: {
      const Mask lo = a & (~a + 1);
      const Mask rest = a & ~lo;
      return lo | (rest & (~rest + 1));
    }
    case Kind::lex_max_edge: {
      const Mask hi = bit(31 - std::countl_zero(a));
      const Mask rest = a & ~hi;
      return hi | bit(31 - std::countl_zero(rest));
    }
    case Kind::table: {
      auto it = table_.find(a);
      if (it == table_.end()) throw DomainError("reducer table has no entry for " + mask_to_string(a));
      return it->second;
    }
  }
  return a;
}

PolygonFamily psi_step(const PolygonFamily& A, const ReducerSpec& g) {
  if (A.empty()) return A;
  Mask best = 0;
  BigCount best_rank;
  bool first = true;
  for (Mask a : A) {
    BigCount r = rank_encode(a, A.universe());
    if (first || r > best_rank) {
      best = a;
      best_rank = std::move(r);
      first = false;
    }
  }
  std::vector<Mask> out;
  for (Mask a : A)
    if (a != best) out.push_back(a);
  out.push_back(g.apply(best));
  return PolygonFamily(A.universe(), std::move(out));
}

EdgeSystemResult edge_systems_min(const PolygonFamily& A, std::uint64_t budget) {
  const unsigned N = A.universe();
  if (N > kOracleMaxUniverse) throw BudgetError("edge systems limited to universes of size 10");
  if (A.empty()) return {0, Family(N), 1};
  std::vector<Mask> members(A.begin(), A.end());
  std::vector<Mask> chosen;
  std::optional<EdgeSystemResult> best;
  std::uint64_t examined = 0;
  bool done = false;

  auto leaf = [&] {
    if (++examined > budget) throw BudgetError("edge system enumeration exceeded budget " + std::to_string(budget));
    PolygonFamily E(N, chosen);
    const unsigned n = norm3(E).norm;
    if (!best || n < best->norm) best = EdgeSystemResult{n, E.base(), 0};
    if (n <= 1) done = true;
  };

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (done) return;
    if (i == members.size()) {
      leaf();
      return;
    }
    const Mask a = members[i];
    for (Mask e : chosen)
      if (is_subset(e, a)) {
        self(self, i + 1);
        return;
      }
    for (unsigned x : mask_elements(a))
      for (unsigned y : mask_elements(a)) {
        if (y <= x || done) continue;
        chosen.push_back(bit(x) | bit(y));
        self(self, i + 1);
        chosen.pop_back();
      }
  };
  dfs(dfs, 0);
  best->systems_examined = examined;
  return *best;
}

PolygonFamily all_kgons(unsigned N, unsigned k) {
  if (k < 2 || k > N) throw DomainError("k-gons need 2 <= k <= N");
  std::vector<Mask> out;
  for_each_k_subset(N, k, [&](Mask a) { out.push_back(a); });
  return PolygonFamily(N, std::move(out));
}

PolygonFamily star_family(unsigned N, unsigned v) {
  if (v >= N) throw DomainError("star centre outside the universe");
  std::vector<Mask> out;
  for (Mask a = 0; a <= full_mask(N); ++a)
    if ((a & bit(v)) && popcount(a) >= 2) out.push_back(a);
  return PolygonFamily(N, std::move(out));
}

PolygonFamily extend_universe(const PolygonFamily& A) { return PolygonFamily(A.universe() + 1, A.base().members()); }

KgonReport kgon_analysis(unsigned N, unsigned k) {
  if (k < 2 || k > N || N > 12) throw DomainError("k-gon analysis needs 2 <= k <= N <= 12");
  SplitResult s = splitting_number(all_kgons(N, k));
  const unsigned ceil_value = (N + k - 2) / (k - 1);
  const unsigned stated_value = std::min(ceil_value, N / k + 1);
  return {N, k, s.c, ceil_value, stated_value, s.witness.partition};
}

SizeBounds size_bounds(unsigned N, unsigned k) {
  if (k < 1 || N < 1 || k > 30 || N > 62) throw DomainError("size bounds need 1 <= k and a small N");
  SizeBounds out{binomial((std::uint64_t{1} << (k - 1)) + 1, 2), BigCount(0), false};
  const std::uint64_t pk = std::uint64_t{1} << k;
  if (N % pk == 0) {
    BigInt v = BigInt(1) << N;
    v -= BigInt(pk) << (N / pk);
    v += pk - 1;
    out.max_size = BigCount(v < 0 ? BigInt(0) : v);
    out.max_exact = true;
  } else {
    const long double v = std::ldexp(1.0L, static_cast<int>(N)) -
                          static_cast<long double>(pk) * std::pow(2.0L, static_cast<long double>(N) / pk) + pk - 1;
    out.max_size = BigCount(static_cast<std::uint64_t>(std::max(0.0L, std::floor(v))));
  }
  return out;
}

std::pair<PolygonFamily, PolygonFamily> rook_construction(unsigned n) {
  if (n < 1 || n * n > kSplitMaxUniverse) throw DomainError("block construction needs 1 <= n and n^2 <= 16");
  const unsigned N = n * n;
  std::vector<Mask> across, inside;
  for (unsigned a = 0; a < N; ++a)
    for (unsigned b = a + 1; b < N; ++b) (a / n == b / n ? inside : across).push_back(bit(a) | bit(b));
  return {PolygonFamily(N, std::move(across)), PolygonFamily(N, std::move(inside))};
}

}  // namespace normforge
