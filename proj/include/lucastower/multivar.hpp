#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucastower/polynomial.hpp"

namespace lucastower {

/// Strictly decreasing sequence of positive integers (r_1, ..., r_l),
/// possibly empty.
class RSequence {
public:
  RSequence() = default;
  /// Throws DomainError unless strictly decreasing and positive.
  explicit RSequence(std::vector<std::uint32_t> entries);
  /// Comma-separated, e.g. "9,3"; the empty string is the empty sequence.
  /// ParseError for malformed text, DomainError for a bad sequence.
  static RSequence parse(std::string_view text);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::uint32_t first() const { return entries_.front(); }
  /// (r_2, ..., r_l)
  RSequence rest() const;
  const std::vector<std::uint32_t> &entries() const { return entries_; }
  std::string to_string() const;

  friend auto operator<=>(const RSequence &, const RSequence &) = default;

private:
  std::vector<std::uint32_t> entries_;
};

/// {m}_R: {0}_R = 0, {m}_() = s1^(m-1), and otherwise
/// {m}_R = {eps_{r1}(m)}_{R'} * phi_{r1}({ceil(m / r1)}). Memoized.
Polynomial m_sub_R(std::uint32_t m, const RSequence &R);

/// {m}_R! as the direct product, checked against the block factorization
/// (see factorial_structure). InternalError on mismatch.
Polynomial m_sub_R_factorial(std::uint32_t m, const RSequence &R);

/// The block factorization of {m}_R! for m >= 1 and R non-empty:
///   ({r1}_{R'}!)^block_power * {epsilon}_{R'}! * phi_{r1}(prod {p}! for p in phi_parts)
/// with block_power = (m - epsilon) / r1 and phi_parts the ceiling multiset
/// of m at modulus r1.
struct FactorialStructure {
  std::uint32_t block_power = 0;
  std::uint32_t epsilon = 0;
  std::vector<std::uint32_t> phi_parts;
};

FactorialStructure factorial_structure(std::uint32_t m, const RSequence &R);

/// Expands the block factorization recursively (never touches the direct product).
Polynomial m_sub_R_factorial_factored(std::uint32_t m, const RSequence &R);

/// nu_1 = m, alpha_1 = n, beta_1 = m - n and each next entry is eps_{r_i}
/// of the previous one, through index l + 1. Once a chain reaches 0 the
/// following entries are std::nullopt (degenerate).
struct NuAlphaBeta {
  std::vector<std::optional<std::uint32_t>> nu;
  std::vector<std::optional<std::uint32_t>> alpha;
  std::vector<std::optional<std::uint32_t>> beta;
};

NuAlphaBeta nu_alpha_beta(std::uint32_t m, std::uint32_t n, const RSequence &R);

/// nu_i = alpha_i + beta_i at every level, which guarantees binomial_R is a
/// polynomial. A degenerate entry counts as a zero summand; a degenerate nu
/// only matches when all three are degenerate.
bool sufficient_condition(std::uint32_t m, std::uint32_t n, const RSequence &R);

/// {m}_R! / ({n}_R! {m-n}_R!) decided by incremental exact division: the
/// running quotient takes the numerator factors {m-n+i}_R one at a time and
/// divides out each {i}_R as soon as it goes in, deferring any that do not
/// yet divide. Leftovers are divided out together at the end; if that
/// fails the result is the non-polynomial pair (running product, leftovers).
RationalForm binomial_R(std::uint32_t m, std::uint32_t n, const RSequence &R);

} // namespace lucastower
