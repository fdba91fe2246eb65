#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cpimm/rational.hpp"

namespace cpimm {

// A 2-adic valuation: either a finite integer exponent or the infinite
// valuation of zero. Infinity compares greater than every finite value and
// absorbs addition.
class Valuation {
 public:
  constexpr Valuation(long long v) : finite_(true), value_(v) {}

  static constexpr Valuation infinity() { return Valuation(InfTag{}); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  constexpr long long value() const {
    if (!finite_) throw std::logic_error("Valuation: value() of infinity");
    return value_;
  }

  friend constexpr bool operator==(Valuation a, Valuation b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
    if (a.finite_ && b.finite_) return a.value_ <=> b.value_;
    if (a.finite_) return std::strong_ordering::less;
    if (b.finite_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

  friend constexpr Valuation operator+(Valuation a, long long s) {
    return a + Valuation(s);
  }

  // "inf" for the infinite valuation, the decimal exponent otherwise.
  std::string to_string() const;

 private:
  struct InfTag {};
  constexpr explicit Valuation(InfTag) : finite_(false), value_(0) {}

  bool finite_;
  long long value_;
};

std::ostream& operator<<(std::ostream& os, Valuation v);

// Valuation knowledge truncated at a threshold: either an exact value or
// only the lower bound "at least e". Exact entries match exactly; bound
// entries match every valuation >= e, including infinity.
class TruncatedValuation {
 public:
  constexpr TruncatedValuation() : exact_(true), bound_(0) {}

  static constexpr TruncatedValuation exact(long long v) {
    return TruncatedValuation(true, v);
  }
  static constexpr TruncatedValuation at_least(long long e) {
    return TruncatedValuation(false, e);
  }

  constexpr bool is_exact() const { return exact_; }
  constexpr long long bound() const { return bound_; }

  constexpr bool matches(Valuation w) const {
    if (exact_) return w == Valuation(bound_);
    return w >= Valuation(bound_);
  }

  friend constexpr TruncatedValuation operator+(TruncatedValuation t, long long shift) {
    return TruncatedValuation(t.exact_, t.bound_ + shift);
  }

  friend constexpr bool operator==(TruncatedValuation, TruncatedValuation) = default;

  // ">=e" for bounds, the decimal value otherwise.
  std::string to_string() const;

 private:
  constexpr TruncatedValuation(bool exact, long long bound)
      : exact_(exact), bound_(bound) {}

  bool exact_;
  long long bound_;
};

std::ostream& operator<<(std::ostream& os, TruncatedValuation t);

// Number of ones in the binary expansion of n. Requires n >= 0.
long long alpha(long long n);

Valuation nu(long long n);
Valuation nu(const Int& n);
Valuation nu(const Rational& q);

// nu(k) truncated at e: the exact value when nu(k) < e, otherwise ">= e".
// Requires k >= 0.
TruncatedValuation nu_trunc(long long k, long long e);

// Valuation of the binomial coefficient C(top, k) for integer top of either
// sign and k >= 0. For top >= 0 this counts the carries when adding k and
// top-k in base 2; a negative top is reduced through
// C(-n, k) = (-1)^k C(n+k-1, k). Infinite exactly when the coefficient is 0.
Valuation nu_binomial(long long top, long long k);

}  // namespace cpimm
