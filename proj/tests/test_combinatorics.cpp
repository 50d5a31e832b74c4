#include <doctest.h>

#include "normforge/combinatorics.hpp"
#include "normforge/errors.hpp"
#include "oracles.hpp"

using namespace normforge;

TEST_CASE("binomial small values and the zero convention") {
  CHECK(binomial(4, 0) == BigCount(1));
  CHECK(binomial(5, 2) == BigCount(10));
  CHECK(binomial(10, 3) == BigCount(120));
  CHECK(binomial(3, 5) == BigCount(0));
  CHECK(binomial(0, 0) == BigCount(1));
}

TEST_CASE("binomial agrees with the Pascal table and factorial definition") {
  for (unsigned n = 0; n <= 40; ++n)
    for (unsigned k = 0; k <= n + 2; ++k) CHECK(binomial(n, k).value() == oracle::binom(n, k));
  CHECK(binomial(10, 3).value() == oracle::fact(10) / (oracle::fact(3) * oracle::fact(7)));
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
}

TEST_CASE("BigCount subtraction below zero is a domain error") {
  BigCount a(3);
  CHECK_THROWS_AS(a -= BigCount(4), DomainError);
  CHECK((BigCount(7) - BigCount(7)) == BigCount(0));
}

TEST_CASE("ExactRatio is kept in lowest terms and renders p/q") {
  CHECK(ExactRatio(2, 4).str() == "1/2");
  CHECK(ExactRatio(-3, 6).str() == "-1/2");
  CHECK(ExactRatio(4, 2).str() == "2/1");
  CHECK(ExactRatio(6, 8).numerator() == 3);
  CHECK(ExactRatio(6, 8).denominator() == 4);
  CHECK(ExactRatio(1, 3) + ExactRatio(1, 6) == ExactRatio(1, 2));
  CHECK(ExactRatio(1, 3) < ExactRatio(1, 2));
  CHECK_THROWS(ExactRatio(1, 0));
  CHECK(ExactRatio::from_double(0.25) == ExactRatio(1, 4));
}

TEST_CASE("identity A worked values") {
  auto c = verify_identity_A(1, 5, 2);
  CHECK(c.lhs == 6);
  CHECK(c.rhs == 6);
  c = verify_identity_A(2, 6, 3);
  CHECK(c.lhs == 6);
  CHECK(c.equal());
  c = verify_identity_A(3, 8, 4);
  CHECK(c.lhs == 10);
  CHECK(c.rhs == 10);
  CHECK_THROWS_AS(verify_identity_A(3, 5, 4), DomainError);
  CHECK_THROWS_AS(verify_identity_A(3, 8, 1), DomainError);
}

TEST_CASE("identity B worked values") {
  auto c = verify_identity_B(1, 5, 2);
  CHECK(c.lhs == 6);
  c = verify_identity_B(2, 6, 3);
  CHECK(c.lhs == 16);
  CHECK(c.rhs == 16);
  c = verify_identity_B(2, 7, 3);
  CHECK(c.lhs == 30);
  CHECK(c.equal());
  CHECK_THROWS_AS(verify_identity_B(2, 4, 3), DomainError);
}

TEST_CASE("identities against independently evaluated sums, a <= 20") {
  for (unsigned a = 1; a <= 20; ++a)
    for (unsigned k = 1; k <= a; ++k)
      for (unsigned b = std::max(1u, k - 1); b + k <= a; ++b) {
        oracle::Int lhs_a = 0, lhs_b = 0, rhs_b = 0;
        for (unsigned i = 1; i <= k; ++i) {
          const int s = (i % 2) ? 1 : -1;
          lhs_a += s * oracle::binom(k - 1, i - 1) * oracle::binom(a - i, b);
          lhs_b += s * oracle::binom(k, i) * oracle::binom(a - i, b);
          rhs_b += oracle::binom(a - i, b - i + 1);
        }
        const auto A = verify_identity_A(k, a, b);
        CHECK(A.lhs == lhs_a);
        CHECK(A.rhs == oracle::binom(a - k, b - k + 1));
        CHECK(A.equal());
        const auto B = verify_identity_B(k, a, b);
        CHECK(B.lhs == lhs_b);
        CHECK(B.rhs == rhs_b);
        CHECK(B.equal());
      }
}

TEST_CASE("partial function count") {
  CHECK(partial_count(2, 2).first == BigCount(9));
  CHECK(partial_count(4, 1).second == BigCount(16));
  CHECK(partial_count(3, 2).first == BigCount(27));
  for (unsigned N = 1; N <= 12; ++N)
    for (unsigned n = 1; n <= 8; ++n) {
      const auto [s, p] = partial_count(N, n);
      CHECK(s == p);
      CHECK(p.value() == boost::multiprecision::pow(oracle::Int(n + 1), N));
    }
}

TEST_CASE("factorial bounds sandwich m!") {
  for (unsigned m = 1; m <= 100; ++m) {
    const auto fb = factorial_bounds(m);
    const double f = static_cast<double>(oracle::fact(m));
    CHECK(fb.lower <= f * (1 + kFactorialBoundTolerance));
    CHECK(fb.upper >= f * (1 - kFactorialBoundTolerance));
  }
  const auto b5 = factorial_bounds(5);
  CHECK(b5.lower == doctest::Approx(118.019).epsilon(1e-4));
  CHECK_THROWS_AS(factorial_bounds(0), DomainError);
}
