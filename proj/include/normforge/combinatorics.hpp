#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace normforge {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Arbitrary-precision nonnegative integer. Subtraction below zero throws.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigCount(BigInt v);

  const BigInt& value() const noexcept { return value_; }
  std::string str() const { return value_.str(); }
  bool fits_u64() const noexcept;
  std::uint64_t to_u64() const;  // throws std::overflow_error when it does not fit
  double to_double() const { return value_.convert_to<double>(); }

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    value_ *= o.value_;
    return *this;
  }
  BigCount& operator-=(const BigCount& o);

  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
  friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }
  friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
  friend auto operator<=>(const BigCount& a, const BigCount& b) {
    return a.value_ < b.value_ ? std::strong_ordering::less
           : a.value_ == b.value_ ? std::strong_ordering::equal
                                  : std::strong_ordering::greater;
  }

 private:
  BigInt value_{0};
};

// Exact rational, always in lowest terms with a positive denominator.
class ExactRatio {
 public:
  ExactRatio() = default;
  ExactRatio(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExactRatio(const BigInt& num, const BigInt& den);
  explicit ExactRatio(BigRational v) : value_(std::move(v)) {}
  static ExactRatio from_counts(const BigCount& num, const BigCount& den);
  // Exact value of a finite double (every double is a dyadic rational).
  static ExactRatio from_double(double v);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  const BigRational& value() const noexcept { return value_; }
  bool is_integer() const { return denominator() == 1; }
  double to_double() const { return value_.convert_to<double>(); }
  // Always "p/q", q >= 1.
  std::string str() const;

  friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) { return ExactRatio(BigRational(a.value_ + b.value_)); }
  friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) { return ExactRatio(BigRational(a.value_ - b.value_)); }
  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) { return ExactRatio(BigRational(a.value_ * b.value_)); }
  friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b);
  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
  friend auto operator<=>(const ExactRatio& a, const ExactRatio& b) {
    return a.value_ < b.value_ ? std::strong_ordering::less
           : a.value_ == b.value_ ? std::strong_ordering::equal
                                  : std::strong_ordering::greater;
  }

 private:
  BigRational value_{0};
};

// C(n, k), with C(n, k) = 0 for k > n.
BigCount binomial(std::uint64_t n, std::uint64_t k);
BigCount factorial(std::uint64_t n);
BigCount power(std::uint64_t base, std::uint64_t exponent);

// Both sides of a checkable identity. Sides are signed so that a failing
// alternating sum is reported as computed.
struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool equal() const { return lhs == rhs; }
};

// sum_{i=1..k} (-1)^{i-1} C(k-1,i-1) C(a-i,b)  vs  C(a-k, b-k+1).
// Requires positive k, a, b with k-1 <= b <= a-k.
IdentityCheck verify_identity_A(std::uint64_t k, std::uint64_t a, std::uint64_t b);

// sum_{i=1..k} (-1)^{i-1} C(k,i) C(a-i,b)  vs  sum_{i=1..k} C(a-i, b-i+1).
// Requires positive k, a, b with k-1 <= b and b+k <= a.
IdentityCheck verify_identity_B(std::uint64_t k, std::uint64_t a, std::uint64_t b);

// (sum_{i=0..N} C(N,i) n^i, (n+1)^N): partial functions N -> n counted by
// domain size, and total functions N -> n+1.
std::pair<BigCount, BigCount> partial_count(std::uint64_t N, std::uint64_t n);

struct FactorialBounds {
  double lower;  // sqrt(2*pi) m^{m+1/2} e^{-m}
  double upper;  // e m^{m+1/2} e^{-m}
};

// Throws DomainError for m == 0 and std::range_error when the bounds overflow a double.
FactorialBounds factorial_bounds(std::uint64_t m);

// Relative tolerance used when a float bound is compared with an exact value.
inline constexpr double kFactorialBoundTolerance = 1e-9;

}  // namespace normforge
