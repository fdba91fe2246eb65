#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace cpimm {

using Int = boost::multiprecision::cpp_int;

// Exact rational number. Invariant: numerator and denominator are coprime,
// the denominator is positive, and zero is stored as 0/1, so structural
// equality coincides with value equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    using boost::multiprecision::gcd;
    Rational r;
    Int g = gcd(x.den_, y.den_);
    if (g == 1) {
      r.num_ = x.num_ * y.den_ + y.num_ * x.den_;
      r.den_ = x.den_ * y.den_;
    } else {
      Int t = x.num_ * (y.den_ / g) + y.num_ * (x.den_ / g);
      Int g2 = gcd(t, g);
      r.num_ = t / g2;
      r.den_ = (x.den_ / g) * (y.den_ / g2);
    }
    return r;
  }

  friend Rational operator-(const Rational& x, const Rational& y) {
    return x + (-y);
  }

  friend Rational operator*(const Rational& x, const Rational& y) {
    using boost::multiprecision::gcd;
    if (x.is_zero() || y.is_zero()) return Rational();
    Rational r;
    Int g1 = gcd(x.num_, y.den_);
    Int g2 = gcd(y.num_, x.den_);
    r.num_ = (x.num_ / g1) * (y.num_ / g2);
    r.den_ = (x.den_ / g2) * (y.den_ / g1);
    return r;
  }

  friend Rational operator/(const Rational& x, const Rational& y) {
    using boost::multiprecision::gcd;
    if (y.is_zero()) throw std::domain_error("Rational: division by zero");
    if (x.is_zero()) return Rational();
    Rational r;
    Int g1 = gcd(x.num_, y.num_);
    Int g2 = gcd(y.den_, x.den_);
    r.num_ = (x.num_ / g1) * (y.den_ / g2);
    r.den_ = (x.den_ / g2) * (y.num_ / g1);
    if (r.den_ < 0) {
      r.num_ = -r.num_;
      r.den_ = -r.den_;
    }
    return r;
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    Int l = x.num_ * y.den_;
    Int r = y.num_ * x.den_;
    if (l < r) return std::strong_ordering::less;
    if (l == r) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  // "p/q", with "/q" omitted for integers.
  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

 private:
  void normalize() {
    using boost::multiprecision::gcd;
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace cpimm
