#include "normforge/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "normforge/errors.hpp"

namespace normforge {

namespace {

BigInt signed_binomial(std::uint64_t n, std::uint64_t k) { return binomial(n, k).value(); }

}  // namespace

BigCount::BigCount(BigInt v) : value_(std::move(v)) {
  if (value_ < 0) throw DomainError("BigCount cannot hold a negative value");
}

bool BigCount::fits_u64() const noexcept { return value_ <= std::numeric_limits<std::uint64_t>::max(); }

std::uint64_t BigCount::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("count " + value_.str() + " does not fit in 64 bits");
  return value_.convert_to<std::uint64_t>();
}

BigCount& BigCount::operator-=(const BigCount& o) {
  if (o.value_ > value_) throw DomainError("BigCount subtraction underflow: " + value_.str() + " - " + o.value_.str());
  value_ -= o.value_;
  return *this;
}

ExactRatio::ExactRatio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = BigRational(num, den);
}

ExactRatio ExactRatio::from_counts(const BigCount& num, const BigCount& den) { return ExactRatio(num.value(), den.value()); }

ExactRatio ExactRatio::from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value has no exact rational form");
  int exp = 0;
  double mant = std::frexp(v, &exp);
  // 53 bits of mantissa as an integer, then scale by 2^(exp-53).
  auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num(m);
  BigInt den(1);
  if (exp >= 0) {
    num <<= exp;
  } else {
    den <<= -exp;
  }
  return ExactRatio(num, den);
}

std::string ExactRatio::str() const { return numerator().str() + "/" + denominator().str(); }

ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
  if (b.value_ == 0) throw DomainError("division by zero ratio");
  return ExactRatio(BigRational(a.value_ / b.value_));
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return BigCount(0);
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return BigCount(r);
}

BigCount factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return BigCount(r);
}

BigCount power(std::uint64_t base, std::uint64_t exponent) {
  return BigCount(boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent)));
}

IdentityCheck verify_identity_A(std::uint64_t k, std::uint64_t a, std::uint64_t b) {
  if (k == 0 || a == 0 || b == 0) throw DomainError("identity A needs positive k, a, b");
  if (k - 1 > b || b + k > a) throw DomainError("identity A needs k-1 <= b <= a-k");
  IdentityCheck out;
  for (std::uint64_t i = 1; i <= k; ++i) {
    BigInt term = signed_binomial(k - 1, i - 1) * signed_binomial(a - i, b);
    out.lhs += (i % 2 == 1) ? term : BigInt(-term);
  }
  out.rhs = signed_binomial(a - k, b - k + 1);
  return out;
}

IdentityCheck verify_identity_B(std::uint64_t k, std::uint64_t a, std::uint64_t b) {
  if (k == 0 || a == 0 || b == 0) throw DomainError("identity B needs positive k, a, b");
  if (k - 1 > b || b + k > a) throw DomainError("identity B needs k-1 <= b and b+k <= a");
  IdentityCheck out;
  for (std::uint64_t i = 1; i <= k; ++i) {
    BigInt term = signed_binomial(k, i) * signed_binomial(a - i, b);
    out.lhs += (i % 2 == 1) ? term : BigInt(-term);
    out.rhs += signed_binomial(a - i, b - i + 1);
  }
  return out;
}

std::pair<BigCount, BigCount> partial_count(std::uint64_t N, std::uint64_t n) {
  BigCount sum(0);
  for (std::uint64_t i = 0; i <= N; ++i) sum += binomial(N, i) * power(n, i);
  return {sum, power(n + 1, N)};
}

FactorialBounds factorial_bounds(std::uint64_t m) {
  if (m == 0) throw DomainError("factorial bounds need m >= 1");
  const double md = static_cast<double>(m);
  const double core = (md + 0.5) * std::log(md) - md;
  const double log_lower = 0.5 * std::log(2.0 * M_PI) + core;
  const double log_upper = 1.0 + core;
  const double limit = std::log(std::numeric_limits<double>::max());
  if (log_upper >= limit) throw std::range_error("factorial bounds overflow a double at m=" + std::to_string(m));
  return {std::exp(log_lower), std::exp(log_upper)};
}

}  // namespace normforge
