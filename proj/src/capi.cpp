#include "lucastower.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "lucastower/errors.hpp"
#include "lucastower/lucas.hpp"
#include "lucastower/multivar.hpp"
#include "lucastower/oracle.hpp"
#include "lucastower/rlucas.hpp"
#include "lucastower/series.hpp"

using namespace lucastower;

struct lt_poly {
  Polynomial value;
};
struct lt_rational {
  RationalForm value;
};
struct lt_series {
  TruncatedSeries value;
};
struct lt_words {
  std::vector<oracle::TilingWord> words;
};
struct lt_tilings {
  std::vector<oracle::BinomialPartialTiling> tilings;
};

namespace {

thread_local std::string last_error;

lt_status fail(lt_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions to status codes.
template <class Body>
lt_status guarded(Body &&body) {
  try {
    return body();
  } catch (const ParseError &e) {
    return fail(LT_ERR_PARSE, e.what());
  } catch (const DomainError &e) {
    return fail(LT_ERR_DOMAIN, e.what());
  } catch (const InternalError &e) {
    return fail(LT_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc &) {
    return fail(LT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(LT_ERR_INTERNAL, e.what());
  }
}

lt_status null_argument() { return fail(LT_ERR_ARGUMENT, "required pointer argument is NULL"); }

char *copy_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

RSequence make_r(const uint32_t *rs, size_t len) {
  if (len > 0 && rs == nullptr)
    throw DomainError("R-sequence pointer is NULL but length is non-zero");
  return RSequence(std::vector<std::uint32_t>(rs, rs + len));
}

template <class Compute>
lt_status emit_poly(lt_poly **out, Compute &&compute) {
  if (out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = new lt_poly{compute()};
    return LT_OK;
  });
}

template <class Compute>
lt_status emit_rational(lt_rational **out, Compute &&compute) {
  if (out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = new lt_rational{compute()};
    return LT_OK;
  });
}

template <class Compute>
lt_status emit_words(lt_words **out, Compute &&compute) {
  if (out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = new lt_words{compute()};
    return LT_OK;
  });
}

} // namespace

extern "C" {

const char *lt_last_error(void) { return last_error.c_str(); }

void lt_string_free(char *s) { std::free(s); }

// polynomials

lt_status lt_poly_parse(const char *text, lt_poly **out) {
  if (text == nullptr)
    return null_argument();
  return emit_poly(out, [&] { return parse_polynomial(text); });
}

lt_status lt_poly_from_json(const char *json, lt_poly **out) {
  if (json == nullptr)
    return null_argument();
  return emit_poly(out, [&] { return polynomial_from_json(json); });
}

void lt_poly_free(lt_poly *p) { delete p; }

lt_status lt_poly_to_string(const lt_poly *p, char **out) {
  if (p == nullptr || out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = copy_string(to_string(p->value));
    return LT_OK;
  });
}

lt_status lt_poly_to_json(const lt_poly *p, char **out) {
  if (p == nullptr || out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = copy_string(to_json(p->value));
    return LT_OK;
  });
}

size_t lt_poly_term_count(const lt_poly *p) { return p ? p->value.size() : 0; }

int lt_poly_equal(const lt_poly *a, const lt_poly *b) {
  return a != nullptr && b != nullptr && a->value == b->value ? 1 : 0;
}

lt_status lt_poly_variables(const lt_poly *p, uint32_t *streams, uint32_t *indices, size_t capacity,
                            size_t *count) {
  if (p == nullptr || count == nullptr)
    return null_argument();
  return guarded([&] {
    auto vars = p->value.variables();
    *count = vars.size();
    if (vars.size() > capacity)
      return fail(LT_ERR_ARGUMENT, "variable buffer too small: need " + std::to_string(vars.size()));
    if (!vars.empty() && (streams == nullptr || indices == nullptr))
      return null_argument();
    size_t i = 0;
    for (VarId v : vars) {
      streams[i] = v.stream;
      indices[i] = v.index;
      ++i;
    }
    return LT_OK;
  });
}

lt_status lt_poly_add(const lt_poly *a, const lt_poly *b, lt_poly **out) {
  if (a == nullptr || b == nullptr)
    return null_argument();
  return emit_poly(out, [&] { return a->value + b->value; });
}

lt_status lt_poly_mul(const lt_poly *a, const lt_poly *b, lt_poly **out) {
  if (a == nullptr || b == nullptr)
    return null_argument();
  return emit_poly(out, [&] { return a->value * b->value; });
}

lt_status lt_poly_exact_div(const lt_poly *num, const lt_poly *den, lt_poly **out, int *divisible) {
  if (num == nullptr || den == nullptr || out == nullptr || divisible == nullptr)
    return null_argument();
  return guarded([&] {
    auto q = exact_div(num->value, den->value);
    *divisible = q ? 1 : 0;
    *out = q ? new lt_poly{std::move(*q)} : nullptr;
    return LT_OK;
  });
}

lt_status lt_poly_phi(const lt_poly *p, uint32_t r, lt_poly **out) {
  if (p == nullptr)
    return null_argument();
  return emit_poly(out, [&] { return phi(p->value, r); });
}

lt_status lt_poly_upsilon(const lt_poly *p, uint32_t stream, lt_poly **out) {
  if (p == nullptr)
    return null_argument();
  return emit_poly(out, [&] { return upsilon(p->value, stream); });
}

lt_status lt_poly_specialize(const lt_poly *p, const uint32_t *streams, const uint32_t *indices,
                             const int64_t *values, size_t count, char **out) {
  if (p == nullptr || out == nullptr || (count > 0 && (streams == nullptr || indices == nullptr || values == nullptr)))
    return null_argument();
  return guarded([&] {
    std::map<VarId, Integer> assignment;
    for (size_t i = 0; i < count; ++i)
      assignment[VarId{streams[i], indices[i]}] = Integer(std::to_string(values[i]));
    *out = copy_string(specialize(p->value, assignment).get_str());
    return LT_OK;
  });
}

// Lucas polynomials

lt_status lt_lucas(uint32_t m, lt_poly **out) {
  return emit_poly(out, [&] { return lucas(m); });
}

lt_status lt_lucas_factorial(uint32_t m, lt_poly **out) {
  return emit_poly(out, [&] { return lucas_factorial(m); });
}

lt_status lt_lucanomial(uint32_t m, uint32_t n, lt_poly **out) {
  return emit_poly(out, [&] { return lucanomial(m, n); });
}

lt_status lt_lucas_catalan(uint32_t m, lt_poly **out) {
  return emit_poly(out, [&] { return lucas_catalan(m); });
}

// r-layer

lt_status lt_epsilon(uint32_t m, uint32_t r, uint32_t *out) {
  if (out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = epsilon(m, r);
    return LT_OK;
  });
}

lt_status lt_h_r(uint32_t m, uint32_t r, uint64_t *out) {
  if (out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = h_r(m, r);
    return LT_OK;
  });
}

lt_status lt_gamma_r(uint32_t m, uint32_t n, uint32_t r, uint64_t *out) {
  if (out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = gamma_r(m, n, r);
    return LT_OK;
  });
}

lt_status lt_r_lucas(uint32_t m, uint32_t r, lt_poly **out) {
  return emit_poly(out, [&] { return r_lucas(m, r); });
}

lt_status lt_r_lucas_factorial(uint32_t m, uint32_t r, lt_poly **out) {
  return emit_poly(out, [&] { return r_lucas_factorial(m, r); });
}

lt_status lt_r_lucanomial(uint32_t m, uint32_t n, uint32_t r, lt_poly **out) {
  return emit_poly(out, [&] { return r_lucanomial(m, n, r); });
}

lt_status lt_matching(uint32_t m, uint32_t n, uint32_t r, uint32_t *m_star, uint32_t *n_star, uint32_t *k_star,
                      size_t capacity, int *proof_case) {
  if (m_star == nullptr || n_star == nullptr || k_star == nullptr || proof_case == nullptr)
    return null_argument();
  return guarded([&] {
    if (capacity < r)
      return fail(LT_ERR_ARGUMENT, "matching buffers need room for r = " + std::to_string(r) + " entries");
    const MatchingTriple t = matching(m, n, r);
    std::copy(t.m_star.begin(), t.m_star.end(), m_star);
    std::copy(t.n_star.begin(), t.n_star.end(), n_star);
    std::copy(t.k_star.begin(), t.k_star.end(), k_star);
    *proof_case = t.proof_case;
    return LT_OK;
  });
}

lt_status lt_r_catalan(uint32_t m, uint32_t r, lt_rational **out, int *sufficient) {
  if (out == nullptr || sufficient == nullptr)
    return null_argument();
  return guarded([&] {
    CatalanVerdict v = r_catalan(m, r);
    *sufficient = v.sufficient_condition_holds ? 1 : 0;
    *out = new lt_rational{std::move(v.value)};
    return LT_OK;
  });
}

// rational verdicts

void lt_rational_free(lt_rational *q) { delete q; }

int lt_rational_is_polynomial(const lt_rational *q) { return q && q->value.is_polynomial() ? 1 : 0; }

lt_status lt_rational_numerator(const lt_rational *q, lt_poly **out) {
  if (q == nullptr)
    return null_argument();
  return emit_poly(out, [&] { return q->value.numerator; });
}

lt_status lt_rational_denominator(const lt_rational *q, lt_poly **out) {
  if (q == nullptr)
    return null_argument();
  return emit_poly(out, [&] { return q->value.denominator; });
}

lt_status lt_rational_quotient(const lt_rational *q, lt_poly **out) {
  if (q == nullptr)
    return null_argument();
  if (!q->value.is_polynomial())
    return fail(LT_ERR_ARGUMENT, "rational form is not a polynomial");
  return emit_poly(out, [&] { return *q->value.quotient; });
}

// R-Lucas tower

lt_status lt_m_sub_r(uint32_t m, const uint32_t *rs, size_t rs_len, lt_poly **out) {
  return emit_poly(out, [&] { return m_sub_R(m, make_r(rs, rs_len)); });
}

lt_status lt_m_sub_r_factorial(uint32_t m, const uint32_t *rs, size_t rs_len, lt_poly **out) {
  return emit_poly(out, [&] { return m_sub_R_factorial(m, make_r(rs, rs_len)); });
}

lt_status lt_nu_alpha_beta(uint32_t m, uint32_t n, const uint32_t *rs, size_t rs_len, int64_t *nu, int64_t *alpha,
                           int64_t *beta, size_t capacity) {
  if (nu == nullptr || alpha == nullptr || beta == nullptr)
    return null_argument();
  return guarded([&] {
    if (capacity < rs_len + 1)
      return fail(LT_ERR_ARGUMENT, "chain buffers need room for " + std::to_string(rs_len + 1) + " entries");
    const NuAlphaBeta c = nu_alpha_beta(m, n, make_r(rs, rs_len));
    for (size_t i = 0; i < c.nu.size(); ++i) {
      nu[i] = c.nu[i] ? int64_t{*c.nu[i]} : -1;
      alpha[i] = c.alpha[i] ? int64_t{*c.alpha[i]} : -1;
      beta[i] = c.beta[i] ? int64_t{*c.beta[i]} : -1;
    }
    return LT_OK;
  });
}

lt_status lt_sufficient_condition(uint32_t m, uint32_t n, const uint32_t *rs, size_t rs_len, int *out) {
  if (out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = sufficient_condition(m, n, make_r(rs, rs_len)) ? 1 : 0;
    return LT_OK;
  });
}

lt_status lt_binomial_r(uint32_t m, uint32_t n, const uint32_t *rs, size_t rs_len, lt_rational **out) {
  return emit_rational(out, [&] { return binomial_R(m, n, make_r(rs, rs_len)); });
}

// generating functions

lt_status lt_l_series(const uint32_t *rs, size_t rs_len, uint32_t order, lt_series **out) {
  if (out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = new lt_series{l_series(make_r(rs, rs_len), order)};
    return LT_OK;
  });
}

lt_status lt_l_series_numerator(const uint32_t *rs, size_t rs_len, lt_series **out) {
  if (out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = new lt_series{l_series_numerator(make_r(rs, rs_len))};
    return LT_OK;
  });
}

void lt_series_free(lt_series *s) { delete s; }

uint32_t lt_series_order(const lt_series *s) { return s ? s->value.order() : 0; }

lt_status lt_series_coeff(const lt_series *s, uint32_t k, lt_poly **out) {
  if (s == nullptr)
    return null_argument();
  if (k > s->value.order())
    return fail(LT_ERR_ARGUMENT, "coefficient index " + std::to_string(k) + " exceeds the series order");
  return emit_poly(out, [&] { return s->value[k]; });
}

// oracles

lt_status lt_oracle_delta(uint32_t m, lt_words **out) {
  return emit_words(out, [&] { return oracle::enum_delta(m); });
}

lt_status lt_oracle_delta_r(uint32_t m, uint32_t r, lt_words **out) {
  return emit_words(out, [&] { return oracle::enum_delta_r(m, r); });
}

lt_status lt_oracle_delta_R(uint32_t m, const uint32_t *rs, size_t rs_len, lt_words **out) {
  return emit_words(out, [&] { return oracle::enum_delta_R(m, make_r(rs, rs_len)); });
}

void lt_words_free(lt_words *w) { delete w; }

size_t lt_words_count(const lt_words *w) { return w ? w->words.size() : 0; }

size_t lt_words_length(const lt_words *w, size_t i) {
  return w && i < w->words.size() ? w->words[i].size() : 0;
}

uint32_t lt_words_tile(const lt_words *w, size_t i, size_t j) {
  return w && i < w->words.size() && j < w->words[i].size() ? w->words[i][j] : 0;
}

lt_status lt_words_weight_sum(const lt_words *w, lt_poly **out) {
  if (w == nullptr)
    return null_argument();
  return emit_poly(out, [&] { return oracle::weight_sum(w->words); });
}

lt_status lt_oracle_binomial_tilings(uint32_t m, uint32_t n, uint32_t r, lt_tilings **out) {
  if (out == nullptr)
    return null_argument();
  return guarded([&] {
    *out = new lt_tilings{oracle::enum_binomial_partial_tilings(m, n, r)};
    return LT_OK;
  });
}

void lt_tilings_free(lt_tilings *t) { delete t; }

size_t lt_tilings_count(const lt_tilings *t) { return t ? t->tilings.size() : 0; }

const char *lt_tilings_path(const lt_tilings *t, size_t i) {
  return t && i < t->tilings.size() ? t->tilings[i].path.c_str() : nullptr;
}

size_t lt_tilings_row_count(const lt_tilings *t, size_t i) {
  return t && i < t->tilings.size() ? t->tilings[i].rows.size() : 0;
}

size_t lt_tilings_row_length(const lt_tilings *t, size_t i, size_t row) {
  if (t == nullptr || i >= t->tilings.size() || row >= t->tilings[i].rows.size())
    return 0;
  return t->tilings[i].rows[row].size();
}

uint32_t lt_tilings_tile(const lt_tilings *t, size_t i, size_t row, size_t j) {
  if (lt_tilings_row_length(t, i, row) <= j)
    return 0;
  return t->tilings[i].rows[row][j];
}

lt_status lt_tilings_weight_sum(const lt_tilings *t, lt_poly **out) {
  if (t == nullptr)
    return null_argument();
  return emit_poly(out, [&] {
    Polynomial total;
    for (const auto &b : t->tilings)
      total += oracle::weight(b);
    return total;
  });
}

} // extern "C"
