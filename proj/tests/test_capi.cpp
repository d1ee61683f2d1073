// Exercises the shared library through its C header only.
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "lucastower.h"

namespace {

std::string str(const lt_poly *p) {
  char *s = nullptr;
  EXPECT_EQ(lt_poly_to_string(p, &s), LT_OK);
  std::string out = s ? s : "";
  lt_string_free(s);
  return out;
}

lt_poly *parse(const char *text) {
  lt_poly *p = nullptr;
  EXPECT_EQ(lt_poly_parse(text, &p), LT_OK) << lt_last_error();
  return p;
}

} // namespace

TEST(CApi, ParsePrintRoundTrip) {
  lt_poly *p = parse("s2 + s1^2");
  EXPECT_EQ(str(p), "s1^2 + s2");
  EXPECT_EQ(lt_poly_term_count(p), 2u);

  char *json = nullptr;
  ASSERT_EQ(lt_poly_to_json(p, &json), LT_OK);
  lt_poly *q = nullptr;
  ASSERT_EQ(lt_poly_from_json(json, &q), LT_OK);
  lt_string_free(json);
  EXPECT_EQ(lt_poly_equal(p, q), 1);
  lt_poly_free(p);
  lt_poly_free(q);
}

TEST(CApi, ErrorCodes) {
  lt_poly *p = nullptr;
  EXPECT_EQ(lt_poly_parse("s1 +", &p), LT_ERR_PARSE);
  EXPECT_EQ(p, nullptr);
  EXPECT_NE(std::string(lt_last_error()).find("offset"), std::string::npos);

  EXPECT_EQ(lt_lucanomial(2, 5, &p), LT_ERR_DOMAIN);
  EXPECT_NE(std::string(lt_last_error()).find("exceeds"), std::string::npos);
  EXPECT_EQ(lt_lucas(3, nullptr), LT_ERR_ARGUMENT);
  EXPECT_EQ(lt_poly_to_string(nullptr, nullptr), LT_ERR_ARGUMENT);

  const uint32_t bad[] = {3, 9};
  EXPECT_EQ(lt_m_sub_r(5, bad, 2, &p), LT_ERR_DOMAIN);
  EXPECT_NE(std::string(lt_last_error()).find("decreasing"), std::string::npos);

  lt_poly *zero = parse("0"), *one = parse("s1");
  int divisible = -1;
  EXPECT_EQ(lt_poly_exact_div(one, zero, &p, &divisible), LT_ERR_DOMAIN);
  lt_poly_free(zero);
  lt_poly_free(one);
}

TEST(CApi, Arithmetic) {
  lt_poly *a = parse("s1^2 + s2"), *b = parse("s1 + s2");
  lt_poly *sum = nullptr, *prod = nullptr, *q = nullptr;
  ASSERT_EQ(lt_poly_add(a, b, &sum), LT_OK);
  EXPECT_EQ(str(sum), "s1^2 + 2*s2 + s1");
  ASSERT_EQ(lt_poly_mul(a, a, &prod), LT_OK);
  EXPECT_EQ(str(prod), "s1^4 + 2*s1^2*s2 + s2^2");

  int divisible = -1;
  ASSERT_EQ(lt_poly_exact_div(prod, a, &q, &divisible), LT_OK);
  EXPECT_EQ(divisible, 1);
  EXPECT_EQ(lt_poly_equal(q, a), 1);
  lt_poly_free(q);
  q = nullptr;
  ASSERT_EQ(lt_poly_exact_div(a, b, &q, &divisible), LT_OK);
  EXPECT_EQ(divisible, 0);
  EXPECT_EQ(q, nullptr);

  lt_poly *ph = nullptr, *up = nullptr;
  ASSERT_EQ(lt_poly_phi(a, 3, &ph), LT_OK);
  EXPECT_EQ(str(ph), "s3^2 + s6");
  ASSERT_EQ(lt_poly_upsilon(ph, 2, &up), LT_OK);
  EXPECT_EQ(str(up), "s2_3^2 + s2_6");

  uint32_t streams[4], indices[4];
  size_t count = 0;
  ASSERT_EQ(lt_poly_variables(up, streams, indices, 4, &count), LT_OK);
  ASSERT_EQ(count, 2u);
  EXPECT_EQ(streams[0], 2u);
  EXPECT_EQ(indices[0], 3u);
  EXPECT_EQ(indices[1], 6u);
  EXPECT_EQ(lt_poly_variables(up, streams, indices, 1, &count), LT_ERR_ARGUMENT);

  for (auto *p : {a, b, sum, prod, ph, up})
    lt_poly_free(p);
}

TEST(CApi, Specialize) {
  lt_poly *p = nullptr;
  ASSERT_EQ(lt_lucas(10, &p), LT_OK);
  const uint32_t streams[] = {0, 0}, indices[] = {1, 2};
  const int64_t values[] = {1, 1};
  char *out = nullptr;
  ASSERT_EQ(lt_poly_specialize(p, streams, indices, values, 2, &out), LT_OK);
  EXPECT_STREQ(out, "55");
  lt_string_free(out);
  EXPECT_EQ(lt_poly_specialize(p, streams, indices, values, 1, &out), LT_ERR_DOMAIN);
  lt_poly_free(p);
}

TEST(CApi, LucasLayers) {
  lt_poly *p = nullptr;
  ASSERT_EQ(lt_lucanomial(4, 2, &p), LT_OK);
  EXPECT_EQ(str(p), "s1^4 + 3*s1^2*s2 + 2*s2^2");
  lt_poly_free(p);
  ASSERT_EQ(lt_r_lucas(11, 3, &p), LT_OK);
  EXPECT_EQ(str(p), "s1*s3^3 + 2*s1*s3*s6");
  lt_poly_free(p);
  ASSERT_EQ(lt_r_lucanomial(10, 5, 3, &p), LT_OK);
  EXPECT_EQ(str(p), "s1*s3^8 + 5*s1*s3^6*s6 + 9*s1*s3^4*s6^2 + 7*s1*s3^2*s6^3 + 2*s1*s6^4");
  lt_poly_free(p);

  uint32_t e = 0;
  uint64_t h = 0, g = 0;
  ASSERT_EQ(lt_epsilon(52, 9, &e), LT_OK);
  ASSERT_EQ(lt_h_r(37, 8, &h), LT_OK);
  ASSERT_EQ(lt_gamma_r(37, 20, 11, &g), LT_OK);
  EXPECT_EQ(e, 7u);
  EXPECT_EQ(h, 122u);
  EXPECT_EQ(g, 10u);
  EXPECT_EQ(lt_epsilon(0, 9, &e), LT_ERR_DOMAIN);

  uint32_t ms[8], ns[8], ks[8];
  int proof_case = 0;
  ASSERT_EQ(lt_matching(37, 10, 8, ms, ns, ks, 8, &proof_case), LT_OK);
  EXPECT_EQ(std::vector<uint32_t>(ks, ks + 8), (std::vector<uint32_t>{3, 3, 4, 4, 4, 3, 3, 3}));
  EXPECT_EQ(lt_matching(37, 10, 8, ms, ns, ks, 7, &proof_case), LT_ERR_ARGUMENT);
}

TEST(CApi, RationalVerdicts) {
  lt_rational *q = nullptr;
  int sufficient = -1;
  ASSERT_EQ(lt_r_catalan(9, 5, &q, &sufficient), LT_OK);
  EXPECT_EQ(sufficient, 0);
  EXPECT_EQ(lt_rational_is_polynomial(q), 0);
  lt_poly *den = nullptr, *value = nullptr;
  ASSERT_EQ(lt_rational_denominator(q, &den), LT_OK);
  EXPECT_EQ(str(den), "s1^4*s5");
  EXPECT_EQ(lt_rational_quotient(q, &value), LT_ERR_ARGUMENT);
  lt_poly_free(den);
  lt_rational_free(q);

  const uint32_t rs[] = {9, 3};
  ASSERT_EQ(lt_binomial_r(52, 31, rs, 2, &q), LT_OK);
  EXPECT_EQ(lt_rational_is_polynomial(q), 1);
  ASSERT_EQ(lt_rational_quotient(q, &value), LT_OK);
  EXPECT_EQ(lt_poly_term_count(value), 70u);
  lt_poly_free(value);
  lt_rational_free(q);

  int64_t nu[3], alpha[3], beta[3];
  const uint32_t rs2[] = {15, 5};
  ASSERT_EQ(lt_nu_alpha_beta(76, 50, rs2, 2, nu, alpha, beta, 3), LT_OK);
  EXPECT_EQ(nu[1], 1);
  EXPECT_EQ(alpha[1], 5);
  EXPECT_EQ(beta[1], 11);
  ASSERT_EQ(lt_nu_alpha_beta(5, 0, rs2, 2, nu, alpha, beta, 3), LT_OK);
  EXPECT_EQ(alpha[0], 0);
  EXPECT_EQ(alpha[1], -1);
  ASSERT_EQ(lt_sufficient_condition(76, 50, rs2, 2, &sufficient), LT_OK);
  EXPECT_EQ(sufficient, 0);
}

TEST(CApi, SeriesAndOracles) {
  const uint32_t rs[] = {5, 2};
  lt_series *num = nullptr;
  ASSERT_EQ(lt_l_series_numerator(rs, 2, &num), LT_OK);
  ASSERT_EQ(lt_series_order(num), 5u);
  lt_poly *c = nullptr;
  ASSERT_EQ(lt_series_coeff(num, 5, &c), LT_OK);
  EXPECT_EQ(str(c), "s2^2 + s4");
  lt_poly_free(c);
  EXPECT_EQ(lt_series_coeff(num, 6, &c), LT_ERR_ARGUMENT);
  lt_series_free(num);

  lt_words *w = nullptr;
  ASSERT_EQ(lt_oracle_delta_r(10, 3, &w), LT_OK);
  ASSERT_EQ(lt_words_count(w), 3u);
  EXPECT_EQ(lt_words_length(w, 0), 4u);
  EXPECT_EQ(lt_words_tile(w, 1, 2), 6u);
  EXPECT_EQ(lt_words_tile(w, 9, 0), 0u);
  lt_poly *sum = nullptr;
  ASSERT_EQ(lt_words_weight_sum(w, &sum), LT_OK);
  EXPECT_EQ(str(sum), "s1*s3^3 + 2*s1*s3*s6");
  lt_poly_free(sum);
  lt_words_free(w);

  lt_tilings *t = nullptr;
  ASSERT_EQ(lt_oracle_binomial_tilings(3, 1, 1, &t), LT_OK);
  ASSERT_EQ(lt_tilings_count(t), 2u);
  EXPECT_STREQ(lt_tilings_path(t, 1), "WNNN");
  EXPECT_EQ(lt_tilings_path(t, 2), nullptr);
  EXPECT_EQ(lt_tilings_row_count(t, 0), 3u);
  EXPECT_EQ(lt_tilings_tile(t, 1, 0, 0), 2u);
  ASSERT_EQ(lt_tilings_weight_sum(t, &sum), LT_OK);
  EXPECT_EQ(str(sum), "s1^2 + s2");
  lt_poly_free(sum);
  lt_tilings_free(t);
}

TEST(CApi, ConcurrentCallers) {
  std::vector<std::string> results(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i)
    threads.emplace_back([&results, i] {
      lt_poly *p = nullptr;
      if (lt_r_lucanomial(24, 9 + i % 3, 4, &p) == LT_OK) {
        char *s = nullptr;
        lt_poly_to_string(p, &s);
        results[i] = s;
        lt_string_free(s);
        lt_poly_free(p);
      }
    });
  for (auto &t : threads)
    t.join();
  for (std::size_t i = 3; i < results.size(); ++i)
    EXPECT_EQ(results[i], results[i - 3]);
  EXPECT_FALSE(results[0].empty());
}
