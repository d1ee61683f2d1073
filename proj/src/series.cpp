#include "lucastower/series.hpp"

#include <algorithm>

#include "lucastower/errors.hpp"

namespace lucastower {

TruncatedSeries::TruncatedSeries(std::uint32_t order) : order_(order), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::uint32_t order, std::vector<Polynomial> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::monomial(std::uint32_t order, std::uint32_t k, Polynomial c) {
  TruncatedSeries t(order);
  if (k <= order)
    t.coeffs_[k] = std::move(c);
  return t;
}

TruncatedSeries TruncatedSeries::truncated(std::uint32_t order) const {
  return TruncatedSeries(order, coeffs_);
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) {
  TruncatedSeries out(std::min(a.order_, b.order_));
  for (std::uint32_t k = 0; k <= out.order_; ++k)
    out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) {
  TruncatedSeries out(std::min(a.order_, b.order_));
  for (std::uint32_t k = 0; k <= out.order_; ++k)
    out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
  TruncatedSeries out(std::min(a.order_, b.order_));
  for (std::uint32_t i = 0; i <= out.order_; ++i) {
    if (a.coeffs_[i].is_zero())
      continue;
    for (std::uint32_t j = 0; i + j <= out.order_; ++j)
      if (!b.coeffs_[j].is_zero())
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedSeries series_inverse(const TruncatedSeries &d) {
  if (!d[0].is_one())
    throw DomainError("series_inverse: constant term must be 1");
  std::vector<Polynomial> e(d.order() + 1);
  e[0] = Polynomial(1);
  for (std::uint32_t k = 1; k <= d.order(); ++k) {
    Polynomial acc;
    for (std::uint32_t j = 1; j <= k; ++j)
      if (!d[j].is_zero() && !e[k - j].is_zero())
        acc += d[j] * e[k - j];
    e[k] = -acc;
  }
  return TruncatedSeries(d.order(), std::move(e));
}

namespace {

// 1 - a x^r - b x^{2r}
TruncatedSeries denominator(std::uint32_t order, std::uint32_t r, const Polynomial &a, const Polynomial &b) {
  return TruncatedSeries::monomial(order, 0, Polynomial(1)) - TruncatedSeries::monomial(order, r, a) -
         TruncatedSeries::monomial(order, 2 * r, b);
}

} // namespace

TruncatedSeries lucas_series(std::uint32_t order) {
  auto inv = series_inverse(
      denominator(order, 1, Polynomial::variable(s(1)), Polynomial::variable(s(2))));
  return TruncatedSeries::monomial(order, 1, Polynomial(1)) * inv;
}

TruncatedSeries l_series_numerator(const RSequence &R) {
  if (R.empty())
    return TruncatedSeries::monomial(1, 1, Polynomial(1));
  return l_series(R.rest(), R.first());
}

TruncatedSeries l_series(const RSequence &R, std::uint32_t order) {
  if (R.empty()) {
    // x / (1 - s1 x)
    TruncatedSeries geometric = series_inverse(
        TruncatedSeries::monomial(order, 0, Polynomial(1)) -
        TruncatedSeries::monomial(order, 1, Polynomial::variable(s(1))));
    return TruncatedSeries::monomial(order, 1, Polynomial(1)) * geometric;
  }
  const std::uint32_t r1 = R.first();
  TruncatedSeries numerator = l_series_numerator(R).truncated(order);
  TruncatedSeries inv = series_inverse(
      denominator(order, r1, Polynomial::variable(s(r1)), Polynomial::variable(s(2 * r1))));
  return numerator * inv;
}

} // namespace lucastower
