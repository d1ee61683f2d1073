#include "lucastower/lucas.hpp"

#include <string>
#include <utility>

#include "lucastower/errors.hpp"
#include "memo.hpp"

namespace lucastower {

namespace {

const Polynomial &s1() {
  static const Polynomial v = Polynomial::variable(s(1));
  return v;
}

const Polynomial &s2() {
  static const Polynomial v = Polynomial::variable(s(2));
  return v;
}

detail::Memo<std::uint32_t, Polynomial> lucas_memo;
detail::Memo<std::uint32_t, Polynomial> factorial_memo;
detail::Memo<std::pair<std::uint32_t, std::uint32_t>, Polynomial> lucanomial_memo;

Polynomial lucanomial_recurrence(std::uint32_t m, std::uint32_t n) {
  if (n == 0 || n == m)
    return Polynomial(1);
  return lucanomial_memo.get({m, n}, [&] {
    return lucas(m - n + 1) * lucanomial_recurrence(m - 1, n - 1) +
           s2() * lucas(n - 1) * lucanomial_recurrence(m - 1, n);
  });
}

} // namespace

Polynomial lucas(std::uint32_t m) {
  if (m <= 1)
    return Polynomial(static_cast<long>(m));
  return lucas_memo.get(m, [m] { return s1() * lucas(m - 1) + s2() * lucas(m - 2); });
}

Polynomial lucas_factorial(std::uint32_t m) {
  if (m <= 1)
    return Polynomial(1);
  return factorial_memo.get(m, [m] { return lucas(m) * lucas_factorial(m - 1); });
}

Polynomial lucanomial_by_division(std::uint32_t m, std::uint32_t n) {
  if (n > m)
    throw DomainError("lucanomial: n = " + std::to_string(n) + " exceeds m = " + std::to_string(m));
  auto q = exact_div(lucas_factorial(m), lucas_factorial(n) * lucas_factorial(m - n));
  if (!q)
    throw InternalError("lucanomial: factorial quotient is not a polynomial");
  return *q;
}

Polynomial lucanomial(std::uint32_t m, std::uint32_t n) {
  if (n > m)
    throw DomainError("lucanomial: n = " + std::to_string(n) + " exceeds m = " + std::to_string(m));
  Polynomial value = lucanomial_recurrence(m, n);
  if (value != lucanomial_by_division(m, n))
    throw InternalError("lucanomial: recurrence and division routes disagree");
  return value;
}

Polynomial lucas_catalan(std::uint32_t m) {
  auto q = exact_div(lucanomial(2 * m, m), lucas(m + 1));
  if (!q)
    throw InternalError("lucas_catalan: {m+1} does not divide [2m, m] for m = " + std::to_string(m));
  return *q;
}

} // namespace lucastower
