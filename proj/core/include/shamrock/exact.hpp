#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "shamrock/bigint.hpp"

namespace shamrock {

/// An integer or half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t n) : twice_(2 * n) {}  // NOLINT(google-explicit-constructor)

  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  static constexpr HalfInt half(std::int64_t n) { return from_twice(n); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr std::int64_t floor() const { return twice_ >= 0 ? twice_ / 2 : -((1 - twice_) / 2); }
  constexpr std::int64_t ceil() const { return -from_twice(-twice_).floor(); }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  std::string to_string() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  std::int64_t twice_ = 0;
};

/// n / 2 as a HalfInt.
constexpr HalfInt halve(std::int64_t n) { return HalfInt::from_twice(n); }

/// q * sqrt(pi)^k, exact.
struct SqrtPiScaled {
  BigRational q{1};
  std::int64_t k = 0;

  SqrtPiScaled() = default;
  SqrtPiScaled(BigRational q_, std::int64_t k_) : q(std::move(q_)), k(k_) { normalize(); }

  bool is_zero() const { return q == 0; }
  /// True iff the value is an integer (k == 0, denominator 1).
  bool is_integer() const { return k == 0 && q.get_den() == 1; }
  std::string to_string() const;

  SqrtPiScaled& operator*=(const SqrtPiScaled& o);
  SqrtPiScaled& operator/=(const SqrtPiScaled& o);
  friend SqrtPiScaled operator*(SqrtPiScaled a, const SqrtPiScaled& b) { return a *= b; }
  friend SqrtPiScaled operator/(SqrtPiScaled a, const SqrtPiScaled& b) { return a /= b; }
  SqrtPiScaled& operator+=(const SqrtPiScaled& o);
  friend SqrtPiScaled operator+(SqrtPiScaled a, const SqrtPiScaled& b) { return a += b; }
  friend bool operator==(const SqrtPiScaled& a, const SqrtPiScaled& b) {
    return a.q == b.q && a.k == b.k;
  }

 private:
  void normalize() {
    q.canonicalize();
    if (q == 0) k = 0;
  }
};

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

BigInt factorial(std::int64_t n);

/// H(n) = 0! 1! ... (n-1)! for integer n, and the product of Gamma(k + 1/2),
/// k = 0 .. n - 1/2, for half-integer n. Throws ArithmeticError for n < 0.
SqrtPiScaled hyperfactorial(HalfInt n);

/// Gamma(n) for a positive integer or half-integer n.
SqrtPiScaled gamma_value(HalfInt n);

/// Product of hyperfactorials with integer exponents, kept symbolic so that
/// matching factors cancel before anything is evaluated.
class HyperProduct {
 public:
  HyperProduct& mul(HalfInt n, int exponent = 1);
  HyperProduct& div(HalfInt n) { return mul(n, -1); }
  HyperProduct& operator*=(const HyperProduct& o);
  HyperProduct& operator/=(const HyperProduct& o);
  friend HyperProduct operator*(HyperProduct a, const HyperProduct& b) { return a *= b; }
  friend HyperProduct operator/(HyperProduct a, const HyperProduct& b) { return a /= b; }

  const std::map<HalfInt, int>& factors() const { return factors_; }
  /// Smallest argument with a nonzero exponent, or 0 when empty.
  HalfInt min_argument() const;

  /// Exact value through prime factorizations of the factorials involved.
  SqrtPiScaled evaluate() const;
  /// Exact value as a product of directly computed hyperfactorials.
  SqrtPiScaled evaluate_direct() const;
  /// Natural logarithm of the value, via telescoped log-gamma sums.
  double log_value() const;

 private:
  std::map<HalfInt, int> factors_;
};

}  // namespace shamrock
