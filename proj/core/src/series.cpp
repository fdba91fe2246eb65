#include "cpimm/series.hpp"

#include <stdexcept>
#include <utility>

namespace cpimm {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("TruncatedSeries: needs at least the constant term");
}

TruncatedSeries TruncatedSeries::one(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries::one: negative order");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  return TruncatedSeries(std::move(c));
}

const Rational& TruncatedSeries::coeff(int i) const {
  if (i < 0 || i > order())
    throw std::out_of_range("TruncatedSeries::coeff: index " + std::to_string(i) +
                            " outside order " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries log_over_t_series(int order) {
  if (order < 0) throw std::invalid_argument("log_over_t_series: negative order");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k)
    c[static_cast<std::size_t>(k)] = Rational(k % 2 == 0 ? 1 : -1, k + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries lambda_series(int order) {
  if (order < 0) throw std::invalid_argument("lambda_series: negative order");
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
  Int central = 1;  // C(2k, k)
  Int pow4 = 1;     // 4^k
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      central *= 2 * (2 * k - 1);
      central /= k;
      pow4 *= 4;
    }
    Int num = k % 2 == 0 ? central : -central;
    b[static_cast<std::size_t>(k)] = Rational(std::move(num), pow4 * (2 * k + 1));
  }
  TruncatedSeries quotient{std::move(b)};
  return mul_trunc(quotient, quotient);
}

TruncatedSeries mul_trunc(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("mul_trunc: order mismatch");
  const int n = a.order();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational acc;
    for (int i = 0; i <= k; ++i) acc += a.coeff(i) * b.coeff(k - i);
    c[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries pow_trunc(const TruncatedSeries& a, unsigned long long m) {
  TruncatedSeries result = TruncatedSeries::one(a.order());
  TruncatedSeries base = a;
  while (m > 0) {
    if (m & 1ULL) result = mul_trunc(result, base);
    m >>= 1;
    if (m > 0) base = mul_trunc(base, base);
  }
  return result;
}

}  // namespace cpimm
