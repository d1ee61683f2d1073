#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "lucastower/errors.hpp"
#include "lucastower/lucas.hpp"
#include "lucastower/multivar.hpp"
#include "lucastower/oracle.hpp"
#include "lucastower/rlucas.hpp"
#include "support.hpp"

using namespace lucastower;
using namespace lucastower::oracle;
using lucastower::testing::fibonacci;
using lucastower::testing::P;
using Words = std::vector<TilingWord>;

TEST(Oracle, Delta) {
  EXPECT_EQ(enum_delta(0), Words{{}});
  EXPECT_EQ(enum_delta(3), (Words{{1, 1, 1}, {1, 2}, {2, 1}}));
  EXPECT_EQ(weight_sum(enum_delta(3)), P("s1^3 + 2*s1*s2"));
  EXPECT_EQ(enum_delta(10).size(), 89u);
  for (std::uint32_t m = 0; m <= 20; ++m)
    ASSERT_EQ(Integer(static_cast<unsigned long>(enum_delta(m).size())), fibonacci(m + 1));
}

TEST(Oracle, DeltaR) {
  auto w = enum_delta_r(10, 3);
  EXPECT_EQ(w, (Words{{1, 3, 3, 3}, {1, 3, 6}, {1, 6, 3}}));
  EXPECT_EQ(weight_sum(w), P("s1*s3^3 + 2*s1*s3*s6"));
  for (std::uint32_t r = 1; r <= 6; ++r)
    EXPECT_EQ(enum_delta_r(0, r), Words{{}});
  for (std::uint32_t m = 0; m <= 14; ++m)
    ASSERT_EQ(enum_delta_r(m, 1), enum_delta(m));
}

TEST(Oracle, DeltaRCount) {
  for (std::uint32_t r = 1; r <= 5; ++r)
    for (std::uint32_t m = 0; m <= 20; ++m) {
      auto words = enum_delta_r(m, r);
      ASSERT_EQ(Integer(static_cast<unsigned long>(words.size())), fibonacci(m / r + 1)) << m << "," << r;
      for (const auto &word : words) {
        std::uint32_t total = 0;
        for (auto t : word)
          total += t;
        ASSERT_EQ(total, m);
        ASSERT_EQ(weight(word).leading_term().monomial.weighted_degree(), m);
      }
    }
}

TEST(Oracle, DeltaBigR) {
  auto w = enum_delta_R(17, RSequence({6, 2}));
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(weight_sum(w), P("s1*s2^2*s6^2 + s1*s2^2*s12 + s1*s4*s6^2 + s1*s4*s12"));
  for (std::uint32_t m = 0; m <= 10; ++m)
    EXPECT_EQ(enum_delta_R(m, RSequence{}), Words{TilingWord(m, 1)});
  for (std::uint32_t r = 1; r <= 5; ++r)
    for (std::uint32_t m = 0; m <= 12; ++m)
      ASSERT_EQ(enum_delta_R(m, RSequence({r})), enum_delta_r(m, r));
}

TEST(Oracle, BinomialTilings) {
  for (std::uint32_t m = 0; m <= 8; ++m)
    EXPECT_EQ(binomial_tiling_weight_sum(m, 0), Polynomial(1));
  EXPECT_EQ(binomial_tiling_weight_sum(3, 2), P("s1^2 + s2"));
  EXPECT_EQ(binomial_tiling_weight_sum(4, 2), P("s1^4 + 3*s1^2*s2 + 2*s2^2"));
  EXPECT_THROW(binomial_tiling_weight_sum(2, 3), DomainError);
  EXPECT_THROW(r_binomial_tiling_weight_sum(2, 3, 2), DomainError);
}

TEST(Oracle, RBinomialTilings) {
  for (std::uint32_t m = 0; m <= 6; ++m)
    for (std::uint32_t n = 0; n <= m; ++n)
      ASSERT_EQ(r_binomial_tiling_weight_sum(m, n, 1), binomial_tiling_weight_sum(m, n));
  EXPECT_EQ(r_binomial_tiling_weight_sum(3, 2, 3), P("s3^2 + s6"));
  EXPECT_EQ(r_binomial_tiling_weight_sum(7, 4, 3), phi(lucanomial(7, 4), 3));
}

// Same count on both sides of the scaling bijection.
TEST(Oracle, ScalingBijectionCounts) {
  for (std::uint32_t r = 1; r <= 3; ++r)
    for (std::uint32_t m = 0; m <= 6; ++m)
      for (std::uint32_t n = 0; n <= m; ++n)
        ASSERT_EQ(enum_binomial_partial_tilings(m, n, r).size(), enum_binomial_partial_tilings(m, n).size());
}

// Every arrangement of n W's and m N's, filtered by the structural test,
// must reproduce the DFS enumeration exactly.
TEST(Oracle, PathsMatchFilteredArrangements) {
  for (std::uint32_t r = 1; r <= 3; ++r)
    for (std::uint32_t m = 0; m <= 8; ++m)
      for (std::uint32_t n = 0; n <= m; ++n) {
        std::string steps = std::string(m, 'N') + std::string(n, 'W');
        std::set<std::string> filtered;
        do {
          if (is_partial_tiling_path(steps, m, n, r))
            filtered.insert(steps);
        } while (std::next_permutation(steps.begin(), steps.end()));
        auto paths = enum_partial_tiling_paths(m, n, r);
        ASSERT_EQ(std::set<std::string>(paths.begin(), paths.end()), filtered) << m << "," << n << "," << r;
        ASSERT_EQ(paths.size(), filtered.size());
      }
}

TEST(Oracle, PathStructure) {
  for (std::uint32_t m = 0; m <= 8; ++m)
    for (std::uint32_t n = 0; n <= m; ++n)
      for (const auto &p : enum_partial_tiling_paths(m, n)) {
        ASSERT_EQ(std::count(p.begin(), p.end(), 'N'), static_cast<long>(m));
        ASSERT_EQ(std::count(p.begin(), p.end(), 'W'), static_cast<long>(n));
        ASSERT_EQ(p.find("WW"), std::string::npos) << p;
        if (!p.empty())
          ASSERT_EQ(p.back(), 'N') << p;
      }
  EXPECT_FALSE(is_partial_tiling_path("WWNN", 2, 2));
  EXPECT_FALSE(is_partial_tiling_path("NNW", 2, 1));
}

TEST(Oracle, TilingRowsRespectRules) {
  for (std::uint32_t r = 1; r <= 2; ++r)
    for (std::uint32_t m = 0; m <= 6; ++m)
      for (std::uint32_t n = 0; n <= m; ++n)
        for (const auto &t : enum_binomial_partial_tilings(m, n, r)) {
          ASSERT_EQ(t.rows.size(), m);
          std::size_t row = 0;
          for (std::size_t i = 0; i < t.path.size(); ++i) {
            if (t.path[i] != 'N')
              continue;
            const bool after_west = i > 0 && t.path[i - 1] == 'W';
            for (auto tile : t.rows[row])
              ASSERT_TRUE(tile == r || tile == 2 * r);
            if (after_west && !t.rows[row].empty())
              ASSERT_EQ(t.rows[row].front(), 2 * r) << t.path;
            ++row;
          }
        }
}
