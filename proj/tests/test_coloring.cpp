#include <doctest.h>

#include "normforge/coloring.hpp"
#include "normforge/errors.hpp"
#include "oracles.hpp"

using namespace normforge;

namespace {

PolygonFamily pf(unsigned N, std::vector<Mask> m) { return PolygonFamily(N, std::move(m)); }

std::vector<Mask> P(unsigned N) {
  std::vector<Mask> g;
  for (Mask a = 0; a <= full_mask(N); ++a)
    if (popcount(a) >= 2) g.push_back(a);
  return g;
}

std::vector<Mask> pick(const std::vector<Mask>& ground, std::uint32_t idx) {
  std::vector<Mask> m;
  for (std::size_t j = 0; j < ground.size(); ++j)
    if (idx >> j & 1) m.push_back(ground[j]);
  return m;
}

const PolygonFamily triangle = pf(3, {0b011, 0b110, 0b101});

}  // namespace

TEST_CASE("polygon families reject small members") {
  CHECK_THROWS_AS(pf(3, {0b001}), DomainError);
  CHECK_THROWS_AS(pf(3, {0}), DomainError);
}

TEST_CASE("splitting number worked values") {
  CHECK(splitting_number(triangle).c == 3);
  const auto c4 = splitting_number(pf(4, {0b0011, 0b0110, 0b1100, 0b1001}));
  CHECK(c4.c == 2);
  CHECK(c4.witness.partition.parts() == std::vector<Mask>{0b0101, 0b1010});
  CHECK(splitting_number(pf(4, {})).c == 1);
  CHECK_THROWS_AS(splitting_number(all_kgons(17, 2)), BudgetError);
}

TEST_CASE("norm3 worked values") {
  CHECK(norm3(pf(2, {0b11})).norm == 1);
  CHECK(norm3(triangle).norm == 2);
  CHECK(norm3(pf(3, {0b111})).norm == 1);
  CHECK(norm3(pf(4, {0b0011, 0b0110, 0b1100, 0b1001})).norm == 1);
  const auto w = norm3(triangle).witness;
  CHECK(w.parts_count() == 3);
  CHECK(w.partition.splits(triangle.base()));
}

TEST_CASE("recursive oracle worked values") {
  CHECK_FALSE(norm3_ge_oracle(pf(2, {}), 1));
  CHECK(norm3_ge_oracle(pf(2, {0b11}), 1));
  CHECK_FALSE(norm3_ge_oracle(pf(2, {0b11}), 2));
  CHECK_FALSE(norm3_ge_oracle(pf(4, {0b0011, 0b0110, 0b1100, 0b1001}), 2));
  CHECK_THROWS_AS(norm3_ge_oracle(all_kgons(11, 2), 1), BudgetError);
}

TEST_CASE("splitting number against colouring brute force over P_4") {
  const auto g = P(4);
  for (std::uint32_t idx = 0; idx < (1u << g.size()); ++idx) {
    const auto m = pick(g, idx);
    const PolygonFamily A(4, m);
    const SplitResult s = splitting_number(A);
    CHECK(s.c == oracle::splitting(4, m));
    CHECK(s.witness.partition.size() == s.c);
    CHECK(s.witness.partition.splits(A.base()));
    CHECK(norm3(A).norm == oracle::norm3(4, m));
  }
}

TEST_CASE("splitting number on larger random families against brute force") {
  std::uint64_t state = 7;
  auto next = [&] { return state = state * 6364136223846793005ull + 1442695040888963407ull; };
  for (int t = 0; t < 60; ++t) {
    const unsigned N = 5 + t % 3;
    std::vector<Mask> m;
    const int count = 2 + static_cast<int>(next() >> 60);
    for (int i = 0; i < count; ++i) {
      Mask a;
      do a = static_cast<Mask>(next() >> 40) & full_mask(N);
      while (popcount(a) < 2);
      m.push_back(a);
    }
    CHECK(splitting_number(PolygonFamily(N, m)).c == oracle::splitting(N, m));
  }
}

TEST_CASE("rank encoding") {
  CHECK(rank_encode(0b0001, 4) == BigCount(0));
  CHECK(rank_encode(0b0110, 4) == BigCount(9));
  CHECK(rank_encode(0b0111, 4) == BigCount(36));
  CHECK_THROWS_AS(rank_encode(0, 4), DomainError);
}

TEST_CASE("reducers and psi") {
  std::map<Mask, Mask> table{{0b111, 0b101}};
  const auto g = ReducerSpec::table(table);
  const PolygonFamily A = pf(3, {0b011, 0b110, 0b111});
  const PolygonFamily B = psi_step(A, g);
  CHECK(B == triangle);
  CHECK(norm3(A).norm == 1);
  CHECK(norm3(B).norm == 2);
  CHECK(psi_step(pf(3, {}), g).empty());
  CHECK(psi_step(pf(2, {0b11}), ReducerSpec::lex_min_edge()) == pf(2, {0b11}));
  CHECK(ReducerSpec::lex_min_edge().apply(0b1110) == 0b0110);
  CHECK(ReducerSpec::lex_max_edge().apply(0b1110) == 0b1100);
  CHECK_THROWS_AS(ReducerSpec::table({{0b111, 0b1000}}), DomainError);
  CHECK_THROWS_AS(ReducerSpec::table({{0b111, 0b111}}), DomainError);
  CHECK_THROWS_AS(ReducerSpec::table({{0b111, 0b001}}), DomainError);
  CHECK_THROWS_AS(ReducerSpec::table({{0b011, 0b011}}), DomainError);
  CHECK_THROWS_AS(ReducerSpec::table({}).apply(0b111), DomainError);
}

TEST_CASE("edge systems") {
  auto r = edge_systems_min(pf(3, {0b111}));
  CHECK(r.norm == 1);
  CHECK(r.edges == Family(3, {0b011}));
  r = edge_systems_min(triangle);
  CHECK(r.norm == 2);
  CHECK(r.edges == triangle.base());
  r = edge_systems_min(pf(3, {}));
  CHECK(r.norm == 0);
  CHECK(r.edges.empty());
}

TEST_CASE("k-gon analysis") {
  auto r = kgon_analysis(6, 3);
  CHECK(r.exact == 3);
  CHECK(r.stated_value == 3);
  CHECK(r.matches_claim());
  r = kgon_analysis(4, 2);
  CHECK(r.exact == 4);
  CHECK(r.stated_value == 3);
  CHECK_FALSE(r.matches_claim());
  r = kgon_analysis(7, 3);
  CHECK(r.exact == 4);
  CHECK(r.stated_value == 3);
  CHECK(r.witness.splits(all_kgons(7, 3).base()));
  CHECK_THROWS_AS(kgon_analysis(4, 5), DomainError);
  CHECK_THROWS_AS(kgon_analysis(13, 2), DomainError);
}

TEST_CASE("size bounds") {
  auto b = size_bounds(4, 1);
  CHECK(b.min_size == BigCount(1));
  CHECK(b.max_size == BigCount(9));
  CHECK(b.max_exact);
  b = size_bounds(4, 2);
  CHECK(b.min_size == BigCount(3));
  CHECK(b.max_size == BigCount(11));
  CHECK(size_bounds(5, 3).min_size == BigCount(10));
  CHECK_FALSE(size_bounds(5, 1).max_exact);
}

TEST_CASE("constructions") {
  CHECK(star_family(4, 0).size() == 7);
  CHECK(norm3(star_family(5, 2)).norm == 1);
  CHECK(extend_universe(triangle).universe() == 4);
  CHECK(all_kgons(5, 3).size() == 10);
  const auto [A, B] = rook_construction(2);
  CHECK(A.size() == 4);
  CHECK(B.size() == 2);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(8) == 3);
}
