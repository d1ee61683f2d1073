#include "lucastower/multivar.hpp"

#include <charconv>
#include <list>

#include "lucastower/errors.hpp"
#include "lucastower/lucas.hpp"
#include "lucastower/rlucas.hpp"
#include "memo.hpp"

namespace lucastower {

RSequence::RSequence(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0)
      throw DomainError("R-sequence entries must be positive");
    if (i > 0 && entries_[i] >= entries_[i - 1])
      throw DomainError("R-sequence must be strictly decreasing: " + std::to_string(entries_[i - 1]) +
                        " is followed by " + std::to_string(entries_[i]));
  }
}

RSequence RSequence::parse(std::string_view text) {
  std::vector<std::uint32_t> entries;
  if (text.empty())
    return {};
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view item = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw ParseError("R-sequence: '" + std::string(item) + "' is not a non-negative integer");
    entries.push_back(value);
    if (end == std::string_view::npos)
      break;
    pos = end + 1;
  }
  return RSequence(std::move(entries));
}

RSequence RSequence::rest() const {
  RSequence r;
  r.entries_.assign(entries_.begin() + (entries_.empty() ? 0 : 1), entries_.end());
  return r;
}

std::string RSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out += (i ? "," : "") + std::to_string(entries_[i]);
  return out + ")";
}

namespace {

using Key = std::pair<std::uint32_t, RSequence>;

detail::Memo<Key, Polynomial> m_sub_R_memo;
detail::Memo<Key, Polynomial> factorial_memo;

std::uint32_t ceil_div(std::uint32_t a, std::uint32_t b) { return (a + b - 1) / b; }

} // namespace

Polynomial m_sub_R(std::uint32_t m, const RSequence &R) {
  if (m == 0)
    return {};
  if (R.empty())
    return Polynomial::variable(s(1), m - 1);
  return m_sub_R_memo.get({m, R}, [&] {
    const std::uint32_t r1 = R.first();
    return m_sub_R(epsilon(m, r1), R.rest()) * phi(lucas(ceil_div(m, r1)), r1);
  });
}

Polynomial m_sub_R_factorial(std::uint32_t m, const RSequence &R) {
  if (m == 0)
    return Polynomial(1);
  return factorial_memo.get({m, R}, [&] {
    Polynomial direct = m_sub_R(m, R) * m_sub_R_factorial(m - 1, R);
    if (direct != m_sub_R_factorial_factored(m, R))
      throw InternalError("m_sub_R_factorial: direct product and block factorization disagree for m = " +
                          std::to_string(m) + ", R = " + R.to_string());
    return direct;
  });
}

FactorialStructure factorial_structure(std::uint32_t m, const RSequence &R) {
  if (m == 0 || R.empty())
    throw DomainError("factorial_structure: needs m >= 1 and a non-empty R");
  const std::uint32_t r1 = R.first();
  FactorialStructure st;
  st.epsilon = epsilon(m, r1);
  st.block_power = (m - st.epsilon) / r1;
  st.phi_parts = ceiling_multiset(m, r1);
  return st;
}

Polynomial m_sub_R_factorial_factored(std::uint32_t m, const RSequence &R) {
  if (m == 0)
    return Polynomial(1);
  if (R.empty())
    return Polynomial::variable(s(1), m * (m - 1) / 2);
  const FactorialStructure st = factorial_structure(m, R);
  const RSequence tail = R.rest();
  Polynomial preimage(1);
  for (std::uint32_t p : st.phi_parts)
    preimage *= lucas_factorial(p);
  return m_sub_R_factorial_factored(R.first(), tail).pow(st.block_power) *
         m_sub_R_factorial_factored(st.epsilon, tail) * phi(preimage, R.first());
}

NuAlphaBeta nu_alpha_beta(std::uint32_t m, std::uint32_t n, const RSequence &R) {
  if (n > m)
    throw DomainError("nu_alpha_beta: n = " + std::to_string(n) + " exceeds m = " + std::to_string(m));
  auto chain = [&R](std::uint32_t start) {
    std::vector<std::optional<std::uint32_t>> c{start};
    for (std::uint32_t r : R.entries()) {
      const auto &prev = c.back();
      c.push_back(prev && *prev > 0 ? std::optional(epsilon(*prev, r)) : std::nullopt);
    }
    return c;
  };
  return NuAlphaBeta{chain(m), chain(n), chain(m - n)};
}

bool sufficient_condition(std::uint32_t m, std::uint32_t n, const RSequence &R) {
  const NuAlphaBeta c = nu_alpha_beta(m, n, R);
  for (std::size_t i = 0; i < c.nu.size(); ++i) {
    const auto &nu = c.nu[i];
    const auto &a = c.alpha[i];
    const auto &b = c.beta[i];
    if (!nu) {
      if (a || b)
        return false;
      continue;
    }
    if (*nu != a.value_or(0) + b.value_or(0))
      return false;
  }
  return true;
}

RationalForm binomial_R(std::uint32_t m, std::uint32_t n, const RSequence &R) {
  if (n > m)
    throw DomainError("binomial_R: n = " + std::to_string(n) + " exceeds m = " + std::to_string(m));
  Polynomial running(1);
  std::list<Polynomial> pending;
  auto drain = [&] {
    for (auto it = pending.begin(); it != pending.end();) {
      if (auto q = exact_div(running, *it)) {
        running = std::move(*q);
        it = pending.erase(it);
      } else {
        ++it;
      }
    }
  };
  for (std::uint32_t i = 1; i <= n; ++i) {
    running *= m_sub_R(m - n + i, R);
    pending.push_back(m_sub_R(i, R));
    drain();
  }
  if (pending.empty())
    return RationalForm::polynomial(std::move(running));
  Polynomial rest(1);
  for (const auto &p : pending)
    rest *= p;
  return RationalForm::divide(std::move(running), std::move(rest));
}

} // namespace lucastower
