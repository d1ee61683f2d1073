#pragma once

#include <cstdint>

#include "lucastower/polynomial.hpp"

namespace lucastower {

/// Lucas polynomial {m} in Z[s1, s2]: {0} = 0, {1} = 1,
/// {m} = s1 {m-1} + s2 {m-2}. Memoized.
Polynomial lucas(std::uint32_t m);

/// {m}! = {m}{m-1}...{1}, with {0}! = 1. Memoized.
Polynomial lucas_factorial(std::uint32_t m);

/// Lucanomial {m}!/({n}!{m-n}!), built from the Pascal-type recurrence
///   [m,n] = {m-n+1}[m-1,n-1] + s2 {n-1}[m-1,n]
/// and checked against exact division of the factorials. Throws DomainError
/// when n > m, InternalError if the two routes disagree.
Polynomial lucanomial(std::uint32_t m, std::uint32_t n);

/// Factorial-quotient route alone, for cross-checks.
Polynomial lucanomial_by_division(std::uint32_t m, std::uint32_t n);

/// Catalan analogue [2m, m] / {m+1}; always a polynomial.
Polynomial lucas_catalan(std::uint32_t m);

} // namespace lucastower
