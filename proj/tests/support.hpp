#pragma once

#include <cstdint>
#include <map>
#include <random>

#include "lucastower/polynomial.hpp"

namespace lucastower::testing {

inline Polynomial P(std::string_view text) { return parse_polynomial(text); }

// Plain integer recurrences, kept away from the library on purpose.
inline Integer fibonacci(std::uint32_t m) {
  Integer a = 0, b = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return a;
}

// p_m = 2 p_{m-1} + p_{m-2}: 0, 1, 2, 5, 12, 29, ...
inline Integer pell(std::uint32_t m) {
  Integer a = 0, b = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    Integer c = 2 * b + a;
    a = b;
    b = c;
  }
  return a;
}

// j_m = j_{m-1} + 2 j_{m-2}: 0, 1, 1, 3, 5, 11, ...
inline Integer jacobsthal(std::uint32_t m) {
  Integer a = 0, b = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    Integer c = b + 2 * a;
    a = b;
    b = c;
  }
  return a;
}

inline std::map<VarId, Integer> at_s1_s2(long v1, long v2) { return {{s(1), v1}, {s(2), v2}}; }

// Small random polynomials over a handful of variables, including a
// stream-qualified one so both alphabets get exercised.
class RandomPolys {
public:
  explicit RandomPolys(std::uint32_t seed) : rng_(seed) {}

  Polynomial next(int max_terms = 4, int max_exp = 3, bool stream_zero_only = false) {
    static constexpr VarId vars[] = {{0, 1}, {0, 2}, {0, 3}, {0, 6}, {2, 3}};
    const int nvars = stream_zero_only ? 4 : 5;
    std::uniform_int_distribution<int> terms(0, max_terms), exp(0, max_exp), coeff(-9, 9), var(0, nvars - 1),
        width(0, 3);
    std::vector<Term> out;
    for (int t = terms(rng_); t > 0; --t) {
      std::vector<Monomial::Factor> f;
      for (int w = width(rng_); w > 0; --w)
        f.emplace_back(vars[var(rng_)], exp(rng_));
      out.push_back(Term{Monomial::from_factors(std::move(f)), coeff(rng_)});
    }
    return Polynomial::from_terms(std::move(out));
  }

  // Only s1 and s2, as phi requires.
  Polynomial next_s1s2(int max_terms = 4, int max_exp = 4) {
    std::uniform_int_distribution<int> terms(0, max_terms), exp(0, max_exp), coeff(-9, 9);
    std::vector<Term> out;
    for (int t = terms(rng_); t > 0; --t)
      out.push_back(Term{Monomial::from_factors({{s(1), exp(rng_)}, {s(2), exp(rng_)}}), coeff(rng_)});
    return Polynomial::from_terms(std::move(out));
  }

  std::map<VarId, Integer> assignment() {
    std::uniform_int_distribution<int> v(-5, 5);
    return {{VarId{0, 1}, v(rng_)}, {VarId{0, 2}, v(rng_)}, {VarId{0, 3}, v(rng_)},
            {VarId{0, 6}, v(rng_)}, {VarId{2, 3}, v(rng_)}};
  }

private:
  std::mt19937 rng_;
};

} // namespace lucastower::testing
