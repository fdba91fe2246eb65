#pragma once

#include <vector>

#include "cpimm/rational.hpp"

namespace cpimm {

// Largest coefficient index any of the condition evaluators interrogates.
inline constexpr int kDefaultOrder = 8;

// A formal power series in one variable truncated after T^order, with exact
// rational coefficients. A series of order N stores N+1 coefficients.
// Arithmetic is only defined between series of equal order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  // The constant series 1 of the given order.
  static TruncatedSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// log(1+t)/t truncated at the given order: coefficient k is (-1)^k/(k+1).
TruncatedSeries log_over_t_series(int order = kDefaultOrder);

// lambda(T) = (arcsinh(sqrt(T))/sqrt(T))^2 truncated at the given order,
// computed by squaring the arcsinh quotient series, whose coefficient k is
// (-1)^k C(2k,k) / (4^k (2k+1)).
TruncatedSeries lambda_series(int order = kDefaultOrder);

// Cauchy product truncated to the common order.
TruncatedSeries mul_trunc(const TruncatedSeries& a, const TruncatedSeries& b);

// a^m by binary exponentiation, truncating after every product. m = 0 gives
// the constant series 1.
TruncatedSeries pow_trunc(const TruncatedSeries& a, unsigned long long m);

}  // namespace cpimm
