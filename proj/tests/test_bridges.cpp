#include <doctest.h>

#include <cmath>

#include "normforge/bridges.hpp"
#include "normforge/errors.hpp"
#include "oracles.hpp"

using namespace normforge;

namespace {

FnSet fns(unsigned N, std::initializer_list<const char*> s) {
  std::vector<Mask> m;
  for (const char* x : s) m.push_back(fn_from_string(x));
  return FnSet(N, m);
}

// Cross-check norm4 against the brute-force oracle when the choice enumeration is small.
bool oracle_cheap(const FnSet& A) {
  const auto d = oracle::delta(A.N(), {A.begin(), A.end()});
  double work = std::pow(4.0, static_cast<double>(d.size()));
  for (const auto& s : d) work *= static_cast<double>(1u << oracle::pop(s.dom));
  return work <= 5e6;
}

}  // namespace

TEST_CASE("profile") {
  CHECK(profile(PartialFn::total(4, 0)) == 0);
  CHECK(profile(PartialFn::total(4, fn_from_string("1010"))) == 0b0101);
  CHECK(profile(PartialFn(0b1001, 0b0001)) == 0b0001);
  for (unsigned N = 1; N <= 6; ++N)
    for (Mask p = 0; p <= full_mask(N); ++p) {
      CHECK(profile(profile_inverse(p, N)) == p);
      CHECK(profile_inverse(p, N).is_total(N));
    }
}

TEST_CASE("pstar") {
  CHECK(pstar(fns(4, {"1100", "1110"}), 1) == Family(4, {0b0011}));
  CHECK(pstar(FnSet(4), 1).empty());
  CHECK(pstar(weight_class(4, 2), 1).size() == 6);
  CHECK(pstar(weight_class(4, 1), 2).size() == 4);
  CHECK_THROWS_AS(pstar(FnSet::full(6), 2), DomainError);
}

TEST_CASE("subset bridge worked values") {
  const auto one = subset_bridge_check(1, 4, Family(4, {0b0011}));
  CHECK(one.k == 1);
  CHECK(one.A == fns(4, {"1100"}));
  CHECK(one.norm4 == 2);
  CHECK(one.holds());
  const auto all = subset_bridge_check(1, 4, pstar(weight_class(4, 2), 1));
  CHECK(all.k == 3);
  CHECK(all.norm4 <= 4);
  const auto none = subset_bridge_check(1, 4, Family(4));
  CHECK(none.k == 0);
  CHECK(none.A.empty());
  CHECK(none.norm4 == 1);
  CHECK_THROWS_AS(subset_bridge_check(2, 6, Family(6)), DomainError);
  CHECK_THROWS_AS(subset_bridge_check(1, 4, Family(4, {0b0111})), DomainError);
}

TEST_CASE("subset bridge holds for all 64 families at N = 4") {
  const std::vector<Mask> pairs = {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100};
  for (unsigned s = 0; s < 64; ++s) {
    std::vector<Mask> m;
    std::vector<oracle::Bits> fn;
    for (unsigned j = 0; j < 6; ++j)
      if (s >> j & 1) {
        m.push_back(pairs[j]);
        fn.push_back(pairs[j]);
      }
    const auto r = subset_bridge_check(1, 4, Family(4, m));
    CHECK(r.k == oracle::norm2(4, fn));
    CHECK(r.A.size() == m.size());
    CHECK(r.holds());
    if (oracle_cheap(r.A)) CHECK(r.norm4 == oracle::norm4(4, fn));
  }
}

TEST_CASE("pstar claim scan") {
  const auto r = pstar_claim_scan(2, 1'000'000, true);
  REQUIRE(r.first);
  CHECK(r.first->A == fns(2, {"10"}));
  CHECK(r.first->sigma == PartialFn(0b01, 0));
  CHECK(profile(r.first->sigma) == 0);
  const auto full = pstar_claim_scan(2, 1'000'000);
  CHECK(full.exhausted);
  CHECK(full.sets_examined == 16);
  CHECK(full.violating_sets >= 1);
  CHECK_FALSE(pstar_claim_scan(1, 1'000'000).first);
  CHECK_FALSE(pstar_claim_scan(4, 10).exhausted);
}

TEST_CASE("pplus") {
  const PolygonFamily edges = pplus(weight_class(4, 2));
  CHECK(edges.size() == 6);
  CHECK(pplus(fns(4, {"0000", "1000"})).empty());
  CHECK(pplus(fns(4, {"1110"})) == PolygonFamily(4, {0b0111}));
}

TEST_CASE("weight-2 functions at N = 4") {
  const FnSet A = weight_class(4, 2);
  CHECK(A.size() == 6);
  CHECK(hall_norm4(A) <= 4);
  CHECK(splitting_number(pplus(A)).c == 4);
  CHECK_FALSE(splittable_by(pplus(A), 3));
  const PolygonFamily P = pplus(A);
  CHECK(oracle::splitting(4, {P.begin(), P.end()}) == 4);
}

TEST_CASE("two-block construction") {
  for (unsigned N = 4; N <= 10; N += 2) {
    const FnSet A = two_block_construction(N);
    CHECK(hall_norm4(A) == N / 2 + 1);
    CHECK(splitting_number(pplus(A)).c <= 2);
  }
}

TEST_CASE("edge lemma") {
  for (unsigned N = 2; N <= 5; ++N)
    for (Mask d = 0; d <= full_mask(N); ++d)
      for (Mask o = d;; o = (o - 1) & d) {
        CHECK(edge_lemma_missing(PartialFn(d, o), N).empty());
        if (o == 0) break;
      }
}

TEST_CASE("common subfunction") {
  CHECK_FALSE(common_subfunction(FnFamily(4)));
  const FnFamily d(4, {PartialFn(0b0011, 0b0001), PartialFn(0b0111, 0b0101)});
  CHECK(*common_subfunction(d) == PartialFn(0b0011, 0b0001));
  CHECK(*common_subfunction(FnFamily(4, {PartialFn(0b01, 0), PartialFn(0b01, 1)})) == PartialFn());
}

TEST_CASE("pplus bounds") {
  const auto w = pplus_bounds_check(weight_class(4, 2));
  CHECK(w.splitting == 4);
  CHECK(w.hard_holds());
  const auto zero = pplus_bounds_check(dset(FnFamily(4, {PartialFn::total(4, 0)})));
  CHECK(zero.norm4 == 5);
  CHECK(zero.i_holds);
  CHECK(zero.hard_holds());
  for (unsigned N = 2; N <= 4; ++N)
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << (1u << N)); idx += 7)
      CHECK(pplus_bounds_check(FnSet::from_index_bits(N, idx)).hard_holds());
}

TEST_CASE("closing instances") {
  const auto inst = closing_instances();
  REQUIRE(inst.size() == 2);
  CHECK(inst[0].norm3 >= 2);
  CHECK(inst[0].norm4 <= 4);
  CHECK(inst[1].norm3 <= 1);
  CHECK(inst[1].norm4 == 5);
  CHECK(inst[0].norm3 > inst[1].norm3);
  CHECK(inst[0].norm4 < inst[1].norm4);
}
