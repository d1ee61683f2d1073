#include "lucastower/oracle.hpp"

#include <string>

#include "lucastower/errors.hpp"

namespace lucastower::oracle {

namespace {

// Tilings of `cells` cells by tiles of length `unit` and 2*unit, smaller tile
// first. With `lead_long` the first tile must be the long one (no tiles at
// all is still fine for zero cells).
void compositions(std::uint32_t cells, std::uint32_t unit, bool lead_long, TilingWord &prefix,
                  std::vector<TilingWord> &out) {
  if (cells == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::uint32_t len : {unit, 2 * unit}) {
    if (len > cells || (lead_long && len == unit))
      continue;
    prefix.push_back(len);
    compositions(cells - len, unit, false, prefix, out);
    prefix.pop_back();
  }
}

std::vector<TilingWord> compositions(std::uint32_t cells, std::uint32_t unit, bool lead_long = false) {
  std::vector<TilingWord> out;
  if (cells % unit != 0)
    return out;
  TilingWord prefix;
  compositions(cells, unit, lead_long, prefix, out);
  return out;
}

void require_n_le_m(std::uint32_t m, std::uint32_t n) {
  if (n > m)
    throw DomainError("binomial partial tilings: n = " + std::to_string(n) + " exceeds m = " +
                      std::to_string(m));
}

// Geometry of r*delta_m: row y (0-based from the bottom) has r(m-1-y) cells
// for y < m; the top "row" m-1 is the boundary segment above the diagram.
struct Staircase {
  std::uint32_t m, r;

  std::int64_t row_length(std::uint32_t y) const {
    return std::int64_t{r} * (std::int64_t{m} - 1 - y);
  }
  bool can_north(std::int64_t x, std::uint32_t y) const { return y < m && x <= row_length(y); }
  bool can_west(std::int64_t x, std::uint32_t y) const {
    return y < m && x >= r && x <= std::int64_t{r} * (m - y) && x != row_length(y);
  }
};

void walk(const Staircase &st, std::int64_t x, std::uint32_t y, bool after_west, std::string &path,
          std::vector<std::string> &out) {
  if (x == 0 && y == st.m) {
    out.push_back(path);
    return;
  }
  if (st.can_north(x, y)) {
    path.push_back('N');
    walk(st, x, y + 1, false, path, out);
    path.pop_back();
  }
  if (!after_west && st.can_west(x, y)) {
    path.push_back('W');
    walk(st, x - st.r, y, true, path, out);
    path.pop_back();
  }
}

} // namespace

Polynomial weight(const TilingWord &word) {
  std::vector<Monomial::Factor> factors;
  factors.reserve(word.size());
  for (std::uint32_t len : word)
    factors.emplace_back(s(len), 1);
  return Polynomial(Monomial::from_factors(std::move(factors)));
}

Polynomial weight_sum(std::span<const TilingWord> words) {
  std::vector<Term> terms;
  terms.reserve(words.size());
  for (const auto &w : words)
    terms.push_back(weight(w).leading_term());
  return Polynomial::from_terms(std::move(terms));
}

std::vector<TilingWord> enum_delta(std::uint32_t m) { return compositions(m, 1); }

std::vector<TilingWord> enum_delta_r(std::uint32_t m, std::uint32_t r) {
  if (r == 0)
    throw DomainError("enum_delta_r: r must be positive");
  const std::uint32_t monos = m % r;
  auto words = compositions(m - monos, r);
  for (auto &w : words)
    w.insert(w.begin(), monos, 1);
  return words;
}

std::vector<TilingWord> enum_delta_R(std::uint32_t m, const RSequence &R) {
  if (R.empty())
    return {TilingWord(m, 1)};
  const std::uint32_t r1 = R.first();
  const std::uint32_t head = m % r1;
  std::vector<TilingWord> out;
  for (const auto &prefix : enum_delta_R(head, R.rest()))
    for (const auto &suffix : compositions(m - head, r1)) {
      TilingWord w = prefix;
      w.insert(w.end(), suffix.begin(), suffix.end());
      out.push_back(std::move(w));
    }
  return out;
}

Polynomial weight(const BinomialPartialTiling &tiling) {
  Polynomial w(1);
  for (const auto &row : tiling.rows)
    w *= weight(row);
  return w;
}

std::vector<std::string> enum_partial_tiling_paths(std::uint32_t m, std::uint32_t n, std::uint32_t r) {
  require_n_le_m(m, n);
  if (r == 0)
    throw DomainError("partial tiling paths: r must be positive");
  std::vector<std::string> out;
  std::string path;
  walk(Staircase{m, r}, std::int64_t{r} * n, 0, false, path, out);
  return out;
}

bool is_partial_tiling_path(std::string_view path, std::uint32_t m, std::uint32_t n, std::uint32_t r) {
  if (n > m || r == 0)
    return false;
  const Staircase st{m, r};
  std::int64_t x = std::int64_t{r} * n;
  std::uint32_t y = 0;
  char prev = '\0';
  for (char step : path) {
    if (step == 'N') {
      if (!st.can_north(x, y))
        return false;
      ++y;
    } else if (step == 'W') {
      if (prev == 'W' || !st.can_west(x, y))
        return false;
      x -= r;
    } else {
      return false;
    }
    prev = step;
  }
  return x == 0 && y == m;
}

std::vector<BinomialPartialTiling> enum_binomial_partial_tilings(std::uint32_t m, std::uint32_t n,
                                                                 std::uint32_t r) {
  const Staircase st{m, r};
  std::vector<BinomialPartialTiling> out;
  for (const auto &path : enum_partial_tiling_paths(m, n, r)) {
    // per-row choices, then their cartesian product
    std::vector<std::vector<TilingWord>> choices;
    std::int64_t x = std::int64_t{r} * n;
    std::uint32_t y = 0;
    char prev = '\0';
    for (char step : path) {
      if (step == 'W') {
        x -= r;
      } else {
        const auto cells = static_cast<std::uint32_t>(prev == 'W' ? st.row_length(y) - x : x);
        choices.push_back(compositions(cells, r, prev == 'W'));
        ++y;
      }
      prev = step;
    }
    std::vector<TilingWord> rows;
    auto expand = [&](auto &self, std::size_t row) -> void {
      if (row == choices.size()) {
        out.push_back(BinomialPartialTiling{path, rows});
        return;
      }
      for (const auto &w : choices[row]) {
        rows.push_back(w);
        self(self, row + 1);
        rows.pop_back();
      }
    };
    expand(expand, 0);
  }
  return out;
}

namespace {

Polynomial total_weight(const std::vector<BinomialPartialTiling> &tilings) {
  std::vector<Term> terms;
  terms.reserve(tilings.size());
  for (const auto &t : tilings)
    terms.push_back(weight(t).leading_term());
  return Polynomial::from_terms(std::move(terms));
}

} // namespace

Polynomial binomial_tiling_weight_sum(std::uint32_t m, std::uint32_t n) {
  return total_weight(enum_binomial_partial_tilings(m, n, 1));
}

Polynomial r_binomial_tiling_weight_sum(std::uint32_t m, std::uint32_t n, std::uint32_t r) {
  return total_weight(enum_binomial_partial_tilings(m, n, r));
}

} // namespace lucastower::oracle
