#include "cpimm/dyadic.hpp"

#include <bit>
#include <ostream>

namespace cpimm {

std::string Valuation::to_string() const {
  return finite_ ? std::to_string(value_) : "inf";
}

std::ostream& operator<<(std::ostream& os, Valuation v) {
  return os << v.to_string();
}

std::string TruncatedValuation::to_string() const {
  std::string s = exact_ ? "" : ">=";
  return s + std::to_string(bound_);
}

std::ostream& operator<<(std::ostream& os, TruncatedValuation t) {
  return os << t.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

long long alpha(long long n) {
  if (n < 0) throw std::invalid_argument("alpha: negative argument");
  return std::popcount(static_cast<unsigned long long>(n));
}

Valuation nu(long long n) {
  if (n == 0) return Valuation::infinity();
  // Two's complement preserves the number of trailing zero bits.
  return Valuation(std::countr_zero(static_cast<unsigned long long>(n)));
}

Valuation nu(const Int& n) {
  if (n == 0) return Valuation::infinity();
  Int a = boost::multiprecision::abs(n);
  return Valuation(static_cast<long long>(boost::multiprecision::lsb(a)));
}

Valuation nu(const Rational& q) {
  if (q.is_zero()) return Valuation::infinity();
  return Valuation(nu(q.num()).value() - nu(q.den()).value());
}

TruncatedValuation nu_trunc(long long k, long long e) {
  if (k < 0) throw std::invalid_argument("nu_trunc: negative argument");
  Valuation v = nu(k);
  if (v < Valuation(e)) return TruncatedValuation::exact(v.value());
  return TruncatedValuation::at_least(e);
}

Valuation nu_binomial(long long top, long long k) {
  if (k < 0) throw std::invalid_argument("nu_binomial: negative lower index");
  if (top >= 0) {
    if (k > top) return Valuation::infinity();
    return Valuation(alpha(k) + alpha(top - k) - alpha(top));
  }
  const long long n = -top;
  return Valuation(alpha(k) + alpha(n - 1) - alpha(n + k - 1));
}

}  // namespace cpimm
