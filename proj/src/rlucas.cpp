#include "lucastower/rlucas.hpp"

#include <algorithm>
#include <string>

#include "lucastower/errors.hpp"
#include "lucastower/lucas.hpp"
#include "memo.hpp"

namespace lucastower {

namespace {

using Key2 = std::pair<std::uint32_t, std::uint32_t>;

detail::Memo<Key2, Polynomial> r_lucas_memo;
detail::Memo<Key2, Polynomial> r_factorial_memo;

void require_r(std::uint32_t r, const char *op) {
  if (r == 0)
    throw DomainError(std::string(op) + ": r must be positive");
}

void require_n_le_m(std::uint64_t m, std::uint64_t n, const char *op) {
  if (n > m)
    throw DomainError(std::string(op) + ": n = " + std::to_string(n) + " exceeds m = " +
                      std::to_string(m));
}

Polynomial s1_pow(std::uint64_t e) {
  return Polynomial::variable(s(1), static_cast<std::uint32_t>(e));
}

} // namespace

std::uint32_t epsilon(std::uint32_t m, std::uint32_t r) {
  require_r(r, "epsilon");
  if (m == 0)
    throw DomainError("epsilon: m must be positive");
  return (m - 1) % r + 1;
}

std::uint64_t h_r(std::uint64_t m, std::uint32_t r) {
  require_r(r, "h_r");
  const std::uint64_t full = m / r;
  const std::uint64_t tail = m % r;
  return full * (std::uint64_t{r} * (r - 1) / 2) + (tail == 0 ? 0 : tail * (tail - 1) / 2);
}

std::uint64_t gamma_r(std::uint64_t m, std::uint64_t n, std::uint32_t r) {
  require_r(r, "gamma_r");
  require_n_le_m(m, n, "gamma_r");
  const std::uint64_t a = n % r;
  const std::uint64_t h = (m - n) % r;
  const std::uint64_t closed = h <= r - a ? a * h : (r - a) * (r - h);
  if (closed != h_r(m, r) - h_r(n, r) - h_r(m - n, r))
    throw InternalError("gamma_r: closed form disagrees with the residue sums");
  return closed;
}

Polynomial r_lucas(std::uint32_t m, std::uint32_t r) {
  require_r(r, "r_lucas");
  if (m == 0)
    return {};
  if (m <= r)
    return s1_pow(m - 1);
  return r_lucas_memo.get({m, r}, [m, r] {
    Polynomial value = r_lucas(m - r, r) * Polynomial::variable(s(r));
    if (m > 2 * r)
      value += r_lucas(m - 2 * r, r) * Polynomial::variable(s(2 * r));
    return value;
  });
}

Polynomial r_lucas_factorial_factored(std::uint32_t m, std::uint32_t r) {
  require_r(r, "r_lucas_factorial");
  Polynomial product(1);
  for (std::uint32_t part : ceiling_multiset(m, r))
    product *= lucas_factorial(part);
  return s1_pow(h_r(m, r)) * phi(product, r);
}

Polynomial r_lucas_factorial(std::uint32_t m, std::uint32_t r) {
  require_r(r, "r_lucas_factorial");
  if (m == 0)
    return Polynomial(1);
  return r_factorial_memo.get({m, r}, [m, r] {
    Polynomial direct = r_lucas(m, r) * r_lucas_factorial(m - 1, r);
    if (direct != r_lucas_factorial_factored(m, r))
      throw InternalError("r_lucas_factorial: direct product and factored form disagree");
    return direct;
  });
}

std::vector<std::uint32_t> ceiling_multiset(std::uint64_t x, std::uint32_t r) {
  require_r(r, "ceiling_multiset");
  std::vector<std::uint32_t> parts;
  parts.reserve(r);
  for (std::uint32_t j = 0; j < r; ++j)
    parts.push_back(x > j ? static_cast<std::uint32_t>((x - j + r - 1) / r) : 0);
  return parts; // already decreasing in j
}

MatchingTriple matching(std::uint32_t m, std::uint32_t n, std::uint32_t r) {
  require_r(r, "matching");
  require_n_le_m(m, n, "matching");
  const std::uint32_t k = m - n;
  const std::uint32_t mu = m % r;

  MatchingTriple t;
  t.r = r;
  t.m_star = ceiling_multiset(m, r);
  t.n_star = ceiling_multiset(n, r);
  auto k_increasing = ceiling_multiset(k, r);
  std::reverse(k_increasing.begin(), k_increasing.end());
  t.k_star.resize(r);
  for (std::uint32_t i = 0; i < r; ++i)
    t.k_star[(mu + i) % r] = k_increasing[i];

  for (std::uint32_t i = 0; i < r; ++i)
    if (t.m_star[i] != t.n_star[i] + t.k_star[i])
      throw InternalError("matching: column " + std::to_string(i + 1) + " does not sum for (" +
                          std::to_string(m) + ", " + std::to_string(n) + ", " + std::to_string(r) + ")");

  const std::uint32_t alpha = k % r;
  const std::uint32_t beta = n % r;
  if (mu > 0 && beta > 0)
    t.proof_case = alpha + beta == mu ? 1 : 2;
  else if (mu == 0 && beta > 0)
    t.proof_case = 3;
  else if (mu > 0)
    t.proof_case = 4;
  else
    t.proof_case = 5;
  return t;
}

Polynomial r_lucanomial_by_division(std::uint32_t m, std::uint32_t n, std::uint32_t r) {
  require_r(r, "r_lucanomial");
  require_n_le_m(m, n, "r_lucanomial");
  auto q = exact_div(r_lucas_factorial(m, r), r_lucas_factorial(n, r) * r_lucas_factorial(m - n, r));
  if (!q)
    throw InternalError("r_lucanomial: factorial quotient is not a polynomial");
  return *q;
}

Polynomial r_lucanomial(std::uint32_t m, std::uint32_t n, std::uint32_t r) {
  const MatchingTriple t = matching(m, n, r);
  Polynomial preimage(1);
  for (std::uint32_t i = 0; i < r; ++i)
    preimage *= lucanomial(t.m_star[i], t.n_star[i]);
  Polynomial value = s1_pow(gamma_r(m, n, r)) * phi(preimage, r);
  if (value != r_lucanomial_by_division(m, n, r))
    throw InternalError("r_lucanomial: factorization and division routes disagree");
  return value;
}

CatalanVerdict r_catalan(std::uint32_t m, std::uint32_t r) {
  require_r(r, "r_catalan");
  CatalanVerdict v;
  v.m = m;
  v.r = r;
  v.value = RationalForm::divide(r_lucanomial(2 * m, m, r), r_lucas(m + 1, r));
  v.sufficient_condition_holds = 2 * (m % r) < r;
  if (v.sufficient_condition_holds && !v.value.is_polynomial())
    throw InternalError("r_catalan: sufficient condition holds but division failed");
  return v;
}

} // namespace lucastower
