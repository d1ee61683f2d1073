#pragma once

#include <cstdint>
#include <vector>

#include "lucastower/multivar.hpp"
#include "lucastower/polynomial.hpp"

namespace lucastower {

/// Power series in x truncated after x^order, with coefficients in Z[S].
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::uint32_t order = 0);
  /// Extra coefficients past `order` are dropped, missing ones are zero.
  TruncatedSeries(std::uint32_t order, std::vector<Polynomial> coeffs);

  std::uint32_t order() const { return order_; }
  const Polynomial &operator[](std::uint32_t k) const { return coeffs_.at(k); }
  const std::vector<Polynomial> &coefficients() const { return coeffs_; }

  /// x^k * c, truncated.
  static TruncatedSeries monomial(std::uint32_t order, std::uint32_t k, Polynomial c);

  /// Same series, cut back to a smaller order (or zero-padded to a larger one).
  TruncatedSeries truncated(std::uint32_t order) const;

  friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
  friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
  /// Result order is min of the two orders.
  friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
  friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
  std::uint32_t order_;
  std::vector<Polynomial> coeffs_;
};

/// e with d * e = 1 through x^order; needs d[0] == 1 (DomainError otherwise).
/// e_0 = 1, e_k = -sum_{j=1..k} d_j e_{k-j}.
TruncatedSeries series_inverse(const TruncatedSeries &d);

/// x / (1 - s1 x - s2 x^2): coefficient k is the Lucas polynomial {k}.
TruncatedSeries lucas_series(std::uint32_t order);

/// Numerator of L_R(x): x for the empty sequence (L_() = x/(1 - s1 x)),
/// otherwise L_{R'}(x) truncated after x^{r1}. The returned series has
/// order r1 (order 1 for the empty sequence).
TruncatedSeries l_series_numerator(const RSequence &R);

/// L_R(x) = numerator / (1 - s_{r1} x^{r1} - s_{2 r1} x^{2 r1}), with
/// L_()(x) = x / (1 - s1 x). Coefficient k equals m_sub_R(k, R).
TruncatedSeries l_series(const RSequence &R, std::uint32_t order);

} // namespace lucastower
