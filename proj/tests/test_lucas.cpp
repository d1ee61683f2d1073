#include <gtest/gtest.h>

#include "lucastower/errors.hpp"
#include "lucastower/lucas.hpp"
#include "lucastower/oracle.hpp"
#include "support.hpp"

using namespace lucastower;
using lucastower::testing::at_s1_s2;
using lucastower::testing::fibonacci;
using lucastower::testing::P;

TEST(Lucas, SmallValues) {
  EXPECT_TRUE(lucas(0).is_zero());
  EXPECT_EQ(lucas(1), Polynomial(1));
  EXPECT_EQ(lucas(2), P("s1"));
  EXPECT_EQ(lucas(5), P("s1^4 + 3*s1^2*s2 + s2^2"));
  EXPECT_EQ(lucas(5), oracle::weight_sum(oracle::enum_delta(4)));
}

TEST(Lucas, Factorials) {
  EXPECT_EQ(lucas_factorial(0), Polynomial(1));
  EXPECT_EQ(lucas_factorial(2), P("s1"));
  Polynomial by_tilings(1);
  for (std::uint32_t k = 1; k <= 4; ++k)
    by_tilings *= oracle::weight_sum(oracle::enum_delta(k - 1));
  EXPECT_EQ(lucas_factorial(4), by_tilings);
  EXPECT_EQ(lucas_factorial(4), P("s1") * P("s1^2 + s2") * P("s1^3 + 2*s1*s2"));
}

TEST(Lucas, LucanomialExamples) {
  EXPECT_EQ(lucanomial(3, 2), P("s1^2 + s2"));
  EXPECT_EQ(lucanomial(4, 2), P("s1^4 + 3*s1^2*s2 + 2*s2^2"));
  for (std::uint32_t m = 0; m <= 12; ++m)
    EXPECT_EQ(lucanomial(m, 0), Polynomial(1));
  EXPECT_THROW(lucanomial(2, 3), DomainError);
}

TEST(Lucas, CatalanExamples) {
  EXPECT_EQ(lucas_catalan(0), Polynomial(1));
  // {4 choose 2} = (s1^2 + s2)(s1^2 + 2 s2) and {3} = s1^2 + s2
  EXPECT_EQ(lucanomial(4, 2), P("s1^2 + s2") * P("s1^2 + 2*s2"));
  EXPECT_EQ(lucas_catalan(2), P("s1^2 + 2*s2"));
  EXPECT_EQ(lucas_catalan(2) * lucas(3), lucanomial(4, 2));
}

// At s1 = s2 = 1 the Catalan analogue is F(2m)!/(F(m)! F(m)! F(m+1)) in
// plain integers.
TEST(Lucas, CatalanFibonacciSpecialization) {
  auto fib_factorial = [](std::uint32_t m) {
    Integer f = 1;
    for (std::uint32_t i = 1; i <= m; ++i)
      f *= fibonacci(i);
    return f;
  };
  for (std::uint32_t m = 0; m <= 10; ++m) {
    Integer num = fib_factorial(2 * m);
    Integer den = fib_factorial(m) * fib_factorial(m) * fibonacci(m + 1);
    ASSERT_TRUE(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) << m;
    Integer expected = num / den;
    EXPECT_EQ(specialize(lucas_catalan(m), at_s1_s2(1, 1)), expected) << m;
  }
}

TEST(Lucas, Symmetry) {
  for (std::uint32_t m = 0; m <= 12; ++m)
    for (std::uint32_t n = 0; n <= m; ++n)
      ASSERT_EQ(lucanomial(m, n), lucanomial(m, m - n)) << m << "," << n;
}

TEST(Lucas, RecurrenceMatchesDivision) {
  for (std::uint32_t m = 0; m <= 12; ++m)
    for (std::uint32_t n = 0; n <= m; ++n)
      ASSERT_EQ(lucanomial(m, n), lucanomial_by_division(m, n)) << m << "," << n;
}

TEST(Lucas, TilingOracle) {
  for (std::uint32_t m = 0; m <= 18; ++m)
    ASSERT_EQ(lucas(m + 1), oracle::weight_sum(oracle::enum_delta(m))) << m;
}

TEST(Lucas, PathOracle) {
  for (std::uint32_t m = 0; m <= 8; ++m)
    for (std::uint32_t n = 0; n <= m; ++n)
      ASSERT_EQ(lucanomial(m, n), oracle::binomial_tiling_weight_sum(m, n)) << m << "," << n;
}

TEST(Lucas, SplittingIdentity) {
  const Polynomial s2 = P("s2");
  for (std::uint32_t m = 1; m <= 15; ++m)
    for (std::uint32_t k = 1; k <= m; ++k)
      ASSERT_EQ(lucas(m), lucas(k) * lucas(m - k + 1) + s2 * lucas(k - 1) * lucas(m - k)) << m << "," << k;
}

TEST(Lucas, Specializations) {
  for (std::uint32_t m = 0; m <= 30; ++m) {
    ASSERT_EQ(specialize(lucas(m), at_s1_s2(1, 1)), fibonacci(m));
    ASSERT_EQ(specialize(lucas(m), at_s1_s2(2, -1)), m);
  }
  for (std::uint32_t m = 0; m <= 20; ++m) {
    ASSERT_EQ(specialize(lucas(m), at_s1_s2(1, 2)), lucastower::testing::jacobsthal(m));
    ASSERT_EQ(specialize(lucas(m), at_s1_s2(2, 1)), lucastower::testing::pell(m));
  }
  // s1 = 1+q, s2 = -q at q = 2 gives 1 + q + ... + q^(m-1)
  for (std::uint32_t m = 0; m <= 12; ++m) {
    Integer geometric = 0, q_power = 1;
    for (std::uint32_t i = 0; i < m; ++i, q_power *= 2)
      geometric += q_power;
    ASSERT_EQ(specialize(lucas(m), at_s1_s2(3, -2)), geometric);
  }
}
