#include "normforge/hall.hpp"

#include <algorithm>
#include <set>

#include "normforge/errors.hpp"

namespace normforge {

PartialFn::PartialFn(Mask d, Mask o) : dom(d), ones(o) {
  if (!is_subset(ones, dom)) throw DomainError("partial function has values outside its domain");
}

std::string pfn_to_string(const PartialFn& s) {
  std::string out = "{";
  bool first = true;
  for (unsigned i : mask_elements(s.dom)) {
    if (!first) out += ",";
    out += std::to_string(i) + "↦" + ((s.ones & bit(i)) ? "1" : "0");
    first = false;
  }
  return out + "}";
}

FnSet::FnSet(unsigned N, std::vector<Mask> members) : N_(N), members_(std::move(members)) {
  if (N > kMaxFnUniverse) throw DomainError("function universe above " + std::to_string(kMaxFnUniverse));
  for (Mask f : members_)
    if (!is_subset(f, full_mask(N))) throw DomainError("function " + mask_to_string(f) + " outside universe");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

FnSet FnSet::full(unsigned N) {
  if (N > kMaxFnUniverse) throw BudgetError("full function set above the universe limit");
  std::vector<Mask> all(std::size_t{1} << N);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Mask>(i);
  return FnSet(N, std::move(all));
}

FnSet FnSet::from_index_bits(unsigned N, std::uint64_t index_bits) {
  if (N > 6) throw DomainError("index encoding needs N <= 6");
  std::vector<Mask> out;
  for (unsigned i = 0; i < (1u << N); ++i)
    if (index_bits >> i & 1) out.push_back(i);
  return FnSet(N, std::move(out));
}

bool FnSet::contains(Mask f) const { return std::binary_search(members_.begin(), members_.end(), f); }

std::uint64_t FnSet::index_bits() const {
  if (N_ > 6) throw DomainError("index encoding needs N <= 6");
  std::uint64_t b = 0;
  for (Mask f : members_) b |= std::uint64_t{1} << f;
  return b;
}

FnFamily::FnFamily(unsigned N, std::vector<PartialFn> members) : N_(N), members_(std::move(members)) {
  if (N > kMaxFnUniverse) throw DomainError("function universe above " + std::to_string(kMaxFnUniverse));
  for (const auto& s : members_)
    if (!is_subset(s.dom, full_mask(N))) throw DomainError("partial function " + pfn_to_string(s) + " outside universe");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool FnFamily::contains(const PartialFn& s) const { return std::binary_search(members_.begin(), members_.end(), s); }

FnFamily family_union(const FnFamily& a, const FnFamily& b) {
  if (a.N() != b.N()) throw DomainError("union of families over different universes");
  std::vector<PartialFn> all(a.members());
  all.insert(all.end(), b.begin(), b.end());
  return FnFamily(a.N(), std::move(all));
}

Mask fn_from_string(std::string_view bits) {
  if (bits.size() > kMaxFnUniverse) throw DomainError("function string too long");
  Mask m = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') m |= bit(static_cast<unsigned>(i));
    else if (bits[i] != '0') throw DomainError("function strings use only 0 and 1");
  }
  return m;
}

std::string fn_to_string(Mask ones, unsigned N) {
  std::string s(N, '0');
  for (unsigned i = 0; i < N; ++i)
    if (ones & bit(i)) s[i] = '1';
  return s;
}

FnSet cylinder(const PartialFn& s, unsigned N) {
  if (N > kMaxFnUniverse) throw BudgetError("cylinder enumeration above the universe limit");
  if (!is_subset(s.dom, full_mask(N))) throw DomainError("partial function outside universe");
  const Mask free = full_mask(N) & ~s.dom;
  std::vector<Mask> out;
  // enumerate subsets of the free points
  Mask sub = 0;
  do {
    out.push_back(s.ones | sub);
    sub = (sub - free) & free;
  } while (sub != 0);
  return FnSet(N, std::move(out));
}

std::optional<PartialFn> cylinder_meet(const PartialFn& a, const PartialFn& b) {
  const Mask common = a.dom & b.dom;
  if ((a.ones & common) != (b.ones & common)) return std::nullopt;
  return PartialFn(a.dom | b.dom, a.ones | b.ones);
}

bool meets(const PartialFn& s, const FnSet& A) {
  for (Mask f : A)
    if (s.extended_by(f)) return true;
  return false;
}

FnFamily delta(const FnSet& A) {
  const unsigned N = A.N();
  if (N > kDeltaMaxUniverse) throw BudgetError("delta enumerates 3^N partial functions; N is limited to 12");
  std::vector<std::uint32_t> pow3(N + 1, 1);
  for (unsigned i = 1; i <= N; ++i) pow3[i] = pow3[i - 1] * 3;
  const std::uint32_t codes = pow3[N];
  std::vector<Mask> dom(codes), ones(codes);
  for (std::uint32_t c = 0; c < codes; ++c) {
    std::uint32_t x = c;
    for (unsigned i = 0; i < N; ++i, x /= 3) {
      const unsigned t = x % 3;
      if (t) dom[c] |= bit(i);
      if (t == 2) ones[c] |= bit(i);
    }
  }
  std::vector<char> inA(std::size_t{1} << N, 0);
  for (Mask f : A) inA[f] = 1;
  std::vector<char> meet(codes, 0);
  const Mask full = full_mask(N);
  for (std::uint32_t c = codes; c-- > 0;) {
    if (dom[c] == full) {
      meet[c] = inA[ones[c]];
    } else {
      const unsigned i = static_cast<unsigned>(std::countr_zero(~dom[c]));
      meet[c] = meet[c + pow3[i]] || meet[c + 2 * pow3[i]];
    }
  }
  std::vector<PartialFn> out;
  for (std::uint32_t c = 0; c < codes; ++c) {
    if (meet[c]) continue;
    bool minimal = true;
    for (unsigned i : mask_elements(dom[c])) {
      const std::uint32_t digit = (ones[c] & bit(i)) ? 2 : 1;
      if (!meet[c - digit * pow3[i]]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.emplace_back(dom[c], ones[c]);
  }
  return FnFamily(N, std::move(out));
}

FnSet dset(const FnFamily& d) {
  const unsigned N = d.N();
  if ((std::uint64_t{1} << N) * std::max<std::size_t>(d.size(), 1) > 200000000ull)
    throw BudgetError("dset enumeration exceeds budget");
  std::vector<Mask> out;
  for (Mask f = 0; f <= full_mask(N); ++f) {
    bool avoided = true;
    for (const auto& s : d)
      if (s.extended_by(f)) {
        avoided = false;
        break;
      }
    if (avoided) out.push_back(f);
    if (f == full_mask(N)) break;
  }
  return FnSet(N, std::move(out));
}

bool preceq(const FnFamily& a, const FnFamily& b) {
  for (const auto& s : a) {
    bool found = false;
    for (const auto& r : b)
      if (r.subfunction_of(s)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

unsigned hn(const FnFamily& d) {
  const unsigned N = d.N();
  const std::size_t m = d.size();
  if (m == 0) return N + 1;
  if (m > kHnMaxFamily) throw BudgetError("hn enumerates subfamilies; families are limited to 15 members");
  std::vector<std::uint32_t> disjoint(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && (d.members()[i].dom & d.members()[j].dom) == 0) disjoint[i] |= std::uint32_t{1} << j;
  // mp[S]: largest total domain of a pairwise-disjoint subfamily of S
  std::vector<unsigned> mp(std::size_t{1} << m, 0);
  unsigned k = N;
  for (std::uint32_t S = 1; S < mp.size(); ++S) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(S));
    const std::uint32_t rest = S & (S - 1);
    mp[S] = std::max(mp[rest], d.members()[j].size() + mp[rest & disjoint[j]]);
    k = std::min(k, mp[S] / static_cast<unsigned>(std::popcount(S)));
  }
  return k + 1;
}

std::optional<Selector> find_selector(const FnFamily& d, unsigned k) {
  if (k == 0) throw DomainError("selectors need k >= 1");
  if (d.size() > kHnMaxFamily) throw BudgetError("selector search limited to 15 members");
  const unsigned N = d.N();
  const std::size_t slots = d.size() * k;
  if (slots > N) return std::nullopt;
  std::vector<int> owner(N, -1);  // point -> slot
  std::vector<char> seen;
  auto member_of = [k](std::size_t slot) { return slot / k; };
  auto augment = [&](auto&& self, std::size_t slot) -> bool {
    const Mask dom = d.members()[member_of(slot)].dom;
    for (unsigned p : mask_elements(dom)) {
      if (seen[p]) continue;
      seen[p] = 1;
      if (owner[p] < 0 || self(self, static_cast<std::size_t>(owner[p]))) {
        owner[p] = static_cast<int>(slot);
        return true;
      }
    }
    return false;
  };
  for (std::size_t slot = 0; slot < slots; ++slot) {
    seen.assign(N, 0);
    if (!augment(augment, slot)) return std::nullopt;
  }
  Selector sel;
  sel.k = k;
  std::vector<Mask> picks(d.size(), 0);
  for (unsigned p = 0; p < N; ++p)
    if (owner[p] >= 0) picks[member_of(static_cast<std::size_t>(owner[p]))] |= bit(p);
  for (std::size_t i = 0; i < d.size(); ++i) sel.assignment.emplace_back(d.members()[i], picks[i]);
  return sel;
}

namespace {

inline constexpr std::uint64_t kHallSearchBudget = 20000000;

class BlockSearch {
 public:
  BlockSearch(const std::vector<PartialFn>& members, unsigned k) : members_(members), k_(k) {}

  bool run() { return dfs(0); }
  const std::vector<PartialFn>& blocks() const { return blocks_; }

 private:
  bool dfs(Mask used) {
    if (++nodes_ > kHallSearchBudget) throw BudgetError("HN search exceeded its node budget");
    const PartialFn* pick = nullptr;
    BigCount best_options;
    for (const auto& s : members_) {
      bool covered = false;
      for (const auto& b : blocks_)
        if (b.subfunction_of(s)) {
          covered = true;
          break;
        }
      if (covered) continue;
      const unsigned free = popcount(s.dom & ~used);
      if (free < k_) return false;
      BigCount options = binomial(free, k_);
      if (!pick || options < best_options) {
        pick = &s;
        best_options = std::move(options);
      }
    }
    if (!pick) return true;
    std::vector<PartialFn> key = blocks_;
    std::sort(key.begin(), key.end());
    if (failed_.count(key)) return false;
    const Mask free = pick->dom & ~used;
    bool ok = false;
    for_each_k_subset(popcount(free), k_, [&](Mask local) {
      if (ok) return;
      const Mask S = expand_bits(local, free);
      blocks_.push_back(pick->restrict_to(S));
      if (dfs(used | S)) ok = true;
      else blocks_.pop_back();
    });
    if (!ok) failed_.insert(std::move(key));
    return ok;
  }

  const std::vector<PartialFn>& members_;
  unsigned k_;
  std::vector<PartialFn> blocks_;
  std::set<std::vector<PartialFn>> failed_;
  std::uint64_t nodes_ = 0;
};

std::vector<PartialFn> minimal_members(const FnFamily& d) {
  std::vector<PartialFn> out;
  for (const auto& s : d) {  // canonical order is by size, so subfunctions come first
    bool dominated = false;
    for (const auto& r : out)
      if (r.subfunction_of(s)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace

HallResult hall_norm_HN(const FnFamily& d) {
  const unsigned N = d.N();
  if (d.empty()) return {N + 1, HallWitness{FnFamily(N), N}};
  const std::vector<PartialFn> mins = minimal_members(d);
  unsigned kmax = N;
  for (const auto& s : mins) kmax = std::min(kmax, s.size());
  for (unsigned k = kmax; k >= 1; --k) {
    BlockSearch search(mins, k);
    if (search.run()) return {k + 1, HallWitness{FnFamily(N, search.blocks()), k}};
  }
  return {1, HallWitness{FnFamily(N, {PartialFn()}), 0}};
}

unsigned hall_norm4(const FnSet& A) { return hall_norm_HN(delta(A)).value; }

FnFamily restrict_delta(const FnFamily& d, Mask Z) {
  std::vector<PartialFn> out;
  for (const auto& s : d)
    if (is_subset(s.dom, Z)) out.push_back(s);
  return FnFamily(d.N(), std::move(out));
}

LRSplit lr_split(const FnFamily& d, Mask Z) {
  const Mask Zc = full_mask(d.N()) & ~Z;
  std::vector<PartialFn> L, R;
  for (const auto& s : d) {
    const PartialFn l = s.restrict_to(Z), r = s.restrict_to(Zc);
    if (l.size() >= r.size()) L.push_back(l);
    else R.push_back(r);
  }
  return {FnFamily(d.N(), std::move(L)), FnFamily(d.N(), std::move(R))};
}

FnFamily compress_family(const FnFamily& d, Mask Z) {
  std::vector<PartialFn> out;
  for (const auto& s : d) {
    if (!is_subset(s.dom, Z)) throw DomainError("member " + pfn_to_string(s) + " not inside the sub-universe");
    out.emplace_back(compress_bits(s.dom, Z), compress_bits(s.ones, Z));
  }
  return FnFamily(popcount(Z), std::move(out));
}

FnSet project(const FnSet& A, Mask Z) {
  std::vector<Mask> out;
  for (Mask f : A) out.push_back(compress_bits(f & Z, Z));
  return FnSet(popcount(Z), std::move(out));
}

FnSet glue(const FnSet& A1, const FnSet& A2) {
  if (A1.empty() || A2.empty()) throw DomainError("glue needs nonempty function sets");
  if (A1.N() + A2.N() > kMaxFnUniverse) throw DomainError("glued universe too large");
  if (hall_norm4(A1) <= 1 || hall_norm4(A2) <= 1) throw DomainError("glue needs both norms above 1");
  std::vector<Mask> out;
  for (Mask f : A1)
    for (Mask g : A2) out.push_back(f | (g << A1.N()));
  return FnSet(A1.N() + A2.N(), std::move(out));
}

CutResult cut(const FnSet& A, Mask Z) {
  const unsigned N = A.N();
  if (!is_subset(Z, full_mask(N))) throw DomainError("cut mask outside universe");
  HallResult h = hall_norm_HN(delta(A));
  if (h.value <= 1) throw DomainError("cut needs norm above 1");
  const Mask Zc = full_mask(N) & ~Z;
  LRSplit lr = lr_split(h.witness.refined, Z);
  FnSet AL = dset(compress_family(lr.L, Z));
  FnSet AR = dset(compress_family(lr.R, Zc));
  return {std::move(AL), std::move(AR), h.witness.refined, std::move(lr.L), std::move(lr.R), Z == 0 || Zc == 0};
}

FnSet recombine(const CutResult& c, unsigned N, Mask Z) {
  const Mask Zc = full_mask(N) & ~Z;
  std::vector<Mask> out;
  for (Mask f = 0;; ++f) {
    if (c.A_L.contains(compress_bits(f & Z, Z)) && c.A_R.contains(compress_bits(f & Zc, Zc))) out.push_back(f);
    if (f == full_mask(N)) break;
  }
  return FnSet(N, std::move(out));
}

EmptyRReport empty_R_bound_check(const FnFamily& d, Mask Z) {
  LRSplit lr = lr_split(d, Z);
  if (!lr.R.empty()) throw DomainError("empty-R bound needs R(δ,Z) to be empty");
  const unsigned h = hall_norm_HN(d).value;
  const unsigned hl = hall_norm_HN(lr.L).value;
  return {h, hl, ExactRatio(h) - ExactRatio(BigInt(d.N()), BigInt(2))};
}

FnFamily cone(const PartialFn& rho, unsigned N) {
  const Mask free = full_mask(N) & ~rho.dom;
  std::vector<PartialFn> out;
  Mask extra = 0;
  do {
    Mask vals = 0;
    do {
      out.emplace_back(rho.dom | extra, rho.ones | vals);
      vals = (vals - extra) & extra;
    } while (vals != 0);
    extra = (extra - free) & free;
  } while (extra != 0);
  return FnFamily(N, std::move(out));
}

BigCount hall_size_lower_bound(unsigned N, unsigned k) {
  if (k < 1 || k > N) throw DomainError("size bound needs 1 <= k <= N");
  const unsigned m = N / k;
  BigInt sum = 0;
  for (unsigned j = 1; j <= m; ++j) {
    BigInt term = binomial(m, j).value() * (BigInt(1) << (N - j * k));
    sum += (j % 2 == 1) ? term : BigInt(-term);
  }
  return BigCount((BigInt(1) << N) - sum);
}

}  // namespace normforge
