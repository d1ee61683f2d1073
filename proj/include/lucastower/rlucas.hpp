#pragma once

#include <cstdint>
#include <vector>

#include "lucastower/polynomial.hpp"

namespace lucastower {

/// ((m - 1) mod r) + 1, the residue of m normalized into [1, r].
/// Throws DomainError for m = 0 or r = 0.
std::uint32_t epsilon(std::uint32_t m, std::uint32_t r);

/// Sum over i = 1..m of ((i - 1) mod r): the exponent of s1 in {m}_r!.
std::uint64_t h_r(std::uint64_t m, std::uint32_t r);

/// Exponent of s1 in the r-Lucanomial, from the residues a = n mod r and
/// h = (m - n) mod r:  a*h if h <= r - a, else (r - a)(r - h).
/// Checked against h_r(m) - h_r(n) - h_r(m - n).
std::uint64_t gamma_r(std::uint64_t m, std::uint64_t n, std::uint32_t r);

/// r-Lucas polynomial {m}_r in s1, s_r, s_2r: {0}_r = 0, {i}_r = s1^(i-1)
/// for 1 <= i <= r, then {m}_r = {m-r}_r s_r + {m-2r}_r s_2r with
/// {j}_r = 0 for j < 0.
Polynomial r_lucas(std::uint32_t m, std::uint32_t r);

/// {m}_r! expanded. Also rebuilt as s1^h_r(m) * phi_r(prod_j {ceil((m-j)/r)}!)
/// and compared; a mismatch raises InternalError.
Polynomial r_lucas_factorial(std::uint32_t m, std::uint32_t r);

/// The factored route on its own.
Polynomial r_lucas_factorial_factored(std::uint32_t m, std::uint32_t r);

/// Column-wise matching of the ceiling multisets of m, n and k = m - n.
///
/// Each multiset holds ceil((x - j)/r) for j = 0..r-1 (values below one
/// clamp to 0). M* and N* are listed weakly decreasing; the entries of K
/// are listed weakly increasing starting at column (m mod r) + 1 and wrap
/// around to column 1. Then M*[i] = N*[i] + K*[i] in every column.
struct MatchingTriple {
  std::uint32_t r = 1;
  std::vector<std::uint32_t> m_star;
  std::vector<std::uint32_t> n_star;
  std::vector<std::uint32_t> k_star;
  /// 1..5, which residue configuration the construction hit:
  /// with mu = m mod r, alpha = k mod r, beta = n mod r,
  ///   1: mu > 0, alpha + beta = mu,     beta > 0
  ///   2: mu > 0, alpha + beta = r + mu, beta > 0
  ///   3: mu = 0, alpha + beta = r,      beta > 0
  ///   4: mu > 0, alpha = mu,            beta = 0
  ///   5: mu = 0, alpha = 0,             beta = 0
  int proof_case = 0;
};

/// Ceiling multiset of x at modulus r, in decreasing order.
std::vector<std::uint32_t> ceiling_multiset(std::uint64_t x, std::uint32_t r);

MatchingTriple matching(std::uint32_t m, std::uint32_t n, std::uint32_t r);

/// r-Lucanomial {m}_r!/({n}_r!{m-n}_r!) built as
/// s1^gamma_r(m,n) * phi_r(prod_i [M*_i, N*_i]) and checked against exact
/// division of the factorials.
Polynomial r_lucanomial(std::uint32_t m, std::uint32_t n, std::uint32_t r);

/// Factorial-quotient route on its own.
Polynomial r_lucanomial_by_division(std::uint32_t m, std::uint32_t n, std::uint32_t r);

struct CatalanVerdict {
  std::uint32_t m = 0;
  std::uint32_t r = 1;
  /// numerator = r_lucanomial(2m, m, r), denominator = {m+1}_r, unreduced.
  RationalForm value;
  /// m mod r < r/2, which guarantees a polynomial.
  bool sufficient_condition_holds = false;
};

CatalanVerdict r_catalan(std::uint32_t m, std::uint32_t r);

} // namespace lucastower
