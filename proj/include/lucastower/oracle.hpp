#pragma once

// Brute-force enumeration of the tiling objects behind every polynomial in
// this library. Nothing here calls the algebraic modules; weights are
// accumulated term by term so the sums are independent ground truth.
// Everything is exponential in m.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lucastower/multivar.hpp"
#include "lucastower/polynomial.hpp"

namespace lucastower::oracle {

/// Tile lengths, left to right.
using TilingWord = std::vector<std::uint32_t>;

/// Product of s_len over the tiles.
Polynomial weight(const TilingWord &word);
Polynomial weight_sum(std::span<const TilingWord> words);

/// Tilings of m cells by monominoes and dominoes.
std::vector<TilingWord> enum_delta(std::uint32_t m);

/// (m mod r) monominoes, then any tiling of the rest by tiles of length r and 2r.
std::vector<TilingWord> enum_delta_r(std::uint32_t m, std::uint32_t r);

/// Empty R: m monominoes. Otherwise a member of Delta_{m mod r1, R'} on the
/// first (m mod r1) cells followed by a tiling of the rest by r1 and 2 r1.
std::vector<TilingWord> enum_delta_R(std::uint32_t m, const RSequence &R);

/// A lattice path through the staircase r*delta_m together with the row
/// tilings it carries. `path` is the step string ("W", "N"); rows[y] is the
/// tiling attached to the N step at height y.
struct BinomialPartialTiling {
  std::string path;
  std::vector<TilingWord> rows;
};

Polynomial weight(const BinomialPartialTiling &tiling);

/// Paths from (r n, 0) to (0, m) with unit N steps and W steps of length r
/// that stay inside r*delta_m (rows of r(m-1), ..., r cells plus the two
/// boundary segments), never take two W steps in a row, and step N from
/// every corner point (r(m-1-y), y) of the staircase.
std::vector<std::string> enum_partial_tiling_paths(std::uint32_t m, std::uint32_t n, std::uint32_t r = 1);

/// Structural check of the three path rules above.
bool is_partial_tiling_path(std::string_view path, std::uint32_t m, std::uint32_t n, std::uint32_t r = 1);

/// All (r-)binomial partial tilings: an N step preceded by W tiles the cells
/// of its row to the right of the step, starting with a tile of length 2r
/// when there are any; every other N step tiles the cells to its left.
/// Tiles have length r and 2r. Throws DomainError if n > m.
std::vector<BinomialPartialTiling> enum_binomial_partial_tilings(std::uint32_t m, std::uint32_t n,
                                                                 std::uint32_t r = 1);

Polynomial binomial_tiling_weight_sum(std::uint32_t m, std::uint32_t n);
Polynomial r_binomial_tiling_weight_sum(std::uint32_t m, std::uint32_t n, std::uint32_t r);

} // namespace lucastower::oracle
