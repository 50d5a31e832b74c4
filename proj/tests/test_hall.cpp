#include <doctest.h>

#include <cmath>

#include "normforge/errors.hpp"
#include "normforge/hall.hpp"
#include "oracles.hpp"

using namespace normforge;

namespace {

PartialFn pfn(std::initializer_list<std::pair<unsigned, unsigned>> kv) {
  Mask d = 0, o = 0;
  for (auto [k, v] : kv) {
    d |= bit(k);
    if (v) o |= bit(k);
  }
  return PartialFn(d, o);
}

FnSet fns(unsigned N, std::initializer_list<const char*> s) {
  std::vector<Mask> m;
  for (const char* x : s) m.push_back(fn_from_string(x));
  return FnSet(N, m);
}

std::vector<oracle::Bits> bits_of(const FnSet& A) { return {A.begin(), A.end()}; }

std::vector<oracle::Pf> pf_of(const FnFamily& d) {
  std::vector<oracle::Pf> out;
  for (const auto& s : d) out.push_back({s.dom, s.ones});
  return out;
}

FnFamily family_of(unsigned N, const std::vector<oracle::Pf>& d) {
  std::vector<PartialFn> m;
  for (const auto& s : d) m.emplace_back(s.dom, s.ones);
  return FnFamily(N, m);
}

const FnSet f1 = fns(4, {"0000"}), f12 = fns(4, {"0000", "1111"});

}  // namespace

TEST_CASE("partial functions") {
  CHECK_THROWS_AS(PartialFn(0b01, 0b10), DomainError);
  CHECK(pfn_to_string(pfn({{0, 1}, {3, 0}})) == "{0↦1,3↦0}");
  CHECK(pfn({{0, 1}}).subfunction_of(pfn({{0, 1}, {1, 0}})));
  CHECK_FALSE(pfn({{0, 0}}).subfunction_of(pfn({{0, 1}, {1, 0}})));
  CHECK(fn_from_string("1010") == 0b0101);
  CHECK(fn_to_string(0b0101, 4) == "1010");
}

TEST_CASE("cylinders and meets") {
  CHECK(cylinder(PartialFn(), 2).is_full());
  CHECK(cylinder(PartialFn::total(2, 1), 2) == FnSet(2, {1}));
  CHECK(cylinder(pfn({{0, 1}}), 2) == fns(2, {"10", "11"}));
  CHECK(*cylinder_meet(pfn({{0, 1}}), pfn({{1, 0}})) == pfn({{0, 1}, {1, 0}}));
  CHECK_FALSE(cylinder_meet(pfn({{0, 1}}), pfn({{0, 0}})));
  CHECK(*cylinder_meet(pfn({{2, 1}}), PartialFn()) == pfn({{2, 1}}));
}

TEST_CASE("delta and D worked values") {
  CHECK(delta(FnSet::full(3)).empty());
  CHECK(delta(FnSet(3)) == FnFamily(3, {PartialFn()}));
  const FnSet A = fns(4, {"1111", "1011", "0011"});
  CHECK(delta(A) == FnFamily(4, {pfn({{0, 0}, {1, 1}}), pfn({{2, 0}}), pfn({{3, 0}})}));
  CHECK(dset(FnFamily(2)).is_full());
  CHECK(dset(FnFamily(2, {pfn({{0, 0}})})) == fns(2, {"10", "11"}));
  CHECK(dset(FnFamily(2, {pfn({{0, 0}}), pfn({{0, 1}})})).empty());
  CHECK(dset(FnFamily(2, {pfn({{1, 0}}), pfn({{1, 1}})})).empty());
}

TEST_CASE("delta, D and hn agree with the definitions for every set at N <= 3") {
  for (unsigned N = 1; N <= 3; ++N)
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (1u << N)); ++idx) {
      const FnSet A = FnSet::from_index_bits(N, idx);
      const FnFamily d = delta(A);
      CHECK(d == family_of(N, oracle::delta(N, bits_of(A))));
      CHECK(dset(d) == A);
      if (d.size() <= 8) CHECK(hn(d) == oracle::hn(N, pf_of(d)));
    }
}

TEST_CASE("preceq") {
  const FnFamily any(4, {pfn({{0, 1}})});
  CHECK(preceq(FnFamily(4), any));
  CHECK(preceq(FnFamily(4, {pfn({{0, 1}, {1, 0}})}), any));
  const FnSet B = fns(4, {"0000", "1000"});
  CHECK(preceq(delta(B), delta(f1)));
  CHECK_FALSE(preceq(delta(f1), delta(B)));
}

TEST_CASE("hn worked values at N = 4") {
  const FnFamily A(4, {PartialFn::total(4, 0)});
  const FnFamily B(4, {PartialFn::total(4, 0), PartialFn::total(4, 15)});
  CHECK(hn(A) == 5);
  CHECK(hn(B) == 3);
  CHECK(hn(delta(f1)) == 2);
  CHECK(hn(delta(f12)) == 1);
  CHECK(hn(FnFamily(4)) == 5);
}

TEST_CASE("HN worked values") {
  CHECK(hall_norm_HN(delta(f1)).value == 2);
  // Δ({f1,f2}) consists of the twelve mixed pairs; choosing {i↦0} for every
  // point refines all of them, so HN is 2 while hn is 1.
  CHECK(delta(f12).size() == 12);
  CHECK(hall_norm_HN(delta(f12)).value == 2);
  CHECK(hall_norm_HN(FnFamily(4, {PartialFn::total(4, 6)})).value == 5);
  CHECK(hall_norm_HN(FnFamily(4)).value == 5);
  const FnSet A = fns(4, {"1111", "1011", "0011"});
  CHECK(hall_norm_HN(delta(A)).value == 2);
  CHECK(hall_norm_HN(restrict_delta(delta(A), 0b0011)).value == 3);
}

TEST_CASE("HN witness is a disjoint refinement") {
  const FnSet A = fns(4, {"1111", "1011", "0011"});
  const auto r = hall_norm_HN(delta(A));
  CHECK(r.witness.k == 1);
  Mask used = 0;
  for (const auto& s : r.witness.refined) {
    CHECK(s.size() == r.witness.k);
    CHECK((used & s.dom) == 0);
    used |= s.dom;
  }
  CHECK(preceq(delta(A), r.witness.refined));
}

TEST_CASE("HN against the refinement oracle at N <= 3") {
  for (unsigned N = 1; N <= 3; ++N)
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (1u << N)); ++idx) {
      const FnSet A = FnSet::from_index_bits(N, idx);
      const FnFamily d = delta(A);
      double work = std::pow(4.0, static_cast<double>(d.size()));
      for (const auto& s : d) work *= static_cast<double>(1u << s.size());
      if (work > 5e6) continue;
      CHECK(hall_norm_HN(d).value == oracle::HN(N, pf_of(d)));
      CHECK(hall_norm4(A) == oracle::norm4(N, bits_of(A)));
    }
}

TEST_CASE("norm4 worked values") {
  for (unsigned N = 1; N <= 6; ++N) CHECK(hall_norm4(FnSet::full(N)) == N + 1);
  CHECK(hall_norm4(dset(FnFamily(4, {pfn({{0, 0}})}))) == 2);
  CHECK(hall_norm4(FnSet(4)) == 1);
}

TEST_CASE("selectors") {
  const FnFamily two(4, {PartialFn(0b0011, 0), PartialFn(0b1100, 0)});
  const auto s = find_selector(two, 2);
  REQUIRE(s);
  CHECK(s->assignment.size() == 2);
  const auto t = find_selector(delta(f1), 1);
  REQUIRE(t);
  for (const auto& [sigma, F] : t->assignment) CHECK(F == sigma.dom);
  CHECK_FALSE(find_selector(FnFamily(4, {PartialFn(0b0011, 0), PartialFn(0b0011, 1)}), 2));
  CHECK_THROWS_AS(find_selector(two, 0), DomainError);
}

TEST_CASE("restrict, L/R split and compression") {
  const FnSet A = fns(4, {"1111", "1011", "0011"});
  CHECK(restrict_delta(delta(A), 0b0011) == FnFamily(4, {pfn({{0, 0}, {1, 1}})}));
  CHECK(restrict_delta(delta(A), 0b1111) == delta(A));
  CHECK(restrict_delta(FnFamily(4, {PartialFn(), pfn({{0, 1}})}), 0) == FnFamily(4, {PartialFn()}));
  const FnFamily d(4, {PartialFn(0b0111, 0), PartialFn(0b1000, 0)});
  const LRSplit s = lr_split(d, 0b0111);
  CHECK(s.L == FnFamily(4, {PartialFn(0b0111, 0)}));
  CHECK(s.R == FnFamily(4, {PartialFn(0b1000, 0)}));
  const LRSplit tie = lr_split(FnFamily(4, {PartialFn(0b0101, 0)}), 0b0011);
  CHECK(tie.L.size() == 1);
  CHECK(tie.R.empty());
  CHECK(lr_split(d, 0b1111).R.empty());
  CHECK(compress_family(FnFamily(4, {PartialFn(0b1000, 0b1000)}), 0b1010) == FnFamily(2, {PartialFn(0b10, 0b10)}));
}

TEST_CASE("glue and cut") {
  const FnSet A1 = fns(2, {"10", "11"}), A2 = fns(2, {"10", "11"});
  const FnSet g = glue(A1, A2);
  CHECK(g.size() == 4);
  CHECK(g.N() == 4);
  CHECK(hall_norm4(g) == 2);
  CHECK(hall_norm4(glue(FnSet::full(2), FnSet::full(2))) == 5);
  CHECK_THROWS_AS(glue(FnSet(2), A2), DomainError);
  CHECK(glue(FnSet(2, {0}), A2).size() == 2);

  const FnSet A = dset(FnFamily(4, {PartialFn(0b1111, 0)}));
  const CutResult c = cut(A, 0b0011);
  CHECK(hall_norm4(c.A_L) == 3);
  CHECK(hall_norm4(c.A_R) == 3);
  for (Mask f : recombine(c, 4, 0b0011)) CHECK(A.contains(f));
  CHECK(cut(A, 0b1111).degenerate);
  CHECK_THROWS_AS(cut(FnSet(4), 0b0011), DomainError);
}

TEST_CASE("empty right side bound") {
  const auto r = empty_R_bound_check(FnFamily(4, {PartialFn::total(4, 0)}), 0b0011);
  CHECK(r.HN_delta == 5);
  CHECK(r.HN_L == 3);
  CHECK(r.equality());
  const auto c = empty_R_bound_check(cone(PartialFn::total(4, 5), 4), 0b0011);
  CHECK(c.equality());
  const auto inside = empty_R_bound_check(FnFamily(4, {PartialFn(0b0011, 1)}), 0b0011);
  CHECK(inside.holds());
  CHECK_THROWS_AS(empty_R_bound_check(FnFamily(4, {PartialFn(0b1100, 0)}), 0b0011), DomainError);
  CHECK(cone(PartialFn(0b0011, 0), 4).size() == 9);
}

TEST_CASE("size lower bound") {
  CHECK(hall_size_lower_bound(4, 2) == BigCount(9));
  CHECK(hall_size_lower_bound(2, 1) == BigCount(1));
  CHECK(hall_size_lower_bound(4, 4) == BigCount(15));
}

TEST_CASE("function-set and family codecs") {
  const FnSet A = parse_fnset(R"({"N":4,"functions":["0110","1000"]})");
  CHECK(A.contains(fn_from_string("0110")));
  CHECK(emit_fnset(A) == "{\"N\":4,\"functions\":[\"1000\",\"0110\"]}\n");
  CHECK(parse_fnset(emit_fnset(A)) == A);
  CHECK_THROWS_AS(parse_fnset(R"({"N":4,"functions":["011"]})"), ParseError);
  CHECK_THROWS_AS(parse_fnset(R"({"N":4,"functions":["01a0"]})"), ParseError);
  CHECK_THROWS_AS(parse_fnset(R"({"N":17,"functions":[]})"), ParseError);
  const FnFamily d = parse_fnfamily(R"({"N":4,"pfns":[{"0":1,"3":0},{}]})");
  CHECK(d.size() == 2);
  CHECK(d.contains(PartialFn()));
  CHECK(parse_fnfamily(emit_fnfamily(d)) == d);
  CHECK(emit_pfn(pfn({{3, 0}, {0, 1}})) == "{\"0\":1,\"3\":0}");
  CHECK_THROWS_AS(parse_fnfamily(R"({"N":4,"pfns":[{"4":1}]})"), ParseError);
  CHECK_THROWS_AS(parse_fnfamily(R"({"N":4,"pfns":[{"01":1}]})"), ParseError);
  CHECK_THROWS_AS(parse_fnfamily(R"({"N":4,"pfns":[{"0":2}]})"), ParseError);
}
