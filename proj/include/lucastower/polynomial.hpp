#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lucastower {

using Integer = mpz_class;

/// Variable s_{stream,index}. Stream 0 is the plain alphabet s_1, s_2, ...;
/// stream i >= 1 is the relabelled alphabet s_{i,1}, s_{i,2}, ...
struct VarId {
  std::uint32_t stream = 0;
  std::uint32_t index = 1;

  constexpr VarId() = default;
  constexpr VarId(std::uint32_t stream_, std::uint32_t index_) : stream(stream_), index(index_) {}

  friend constexpr auto operator<=>(const VarId &, const VarId &) = default;
};

/// Shorthand for the stream-0 variable s_index.
constexpr VarId s(std::uint32_t index) { return VarId{0, index}; }

/// A product of variables with positive exponents. The empty product is 1.
class Monomial {
public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(VarId v, std::uint32_t exponent = 1);
  /// Factors need not be sorted; repeated variables are merged and zero
  /// exponents dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor> &factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(VarId v) const;

  /// Sum of index * exponent; equals the number of cells the matching tiling covers.
  std::uint64_t weighted_degree() const { return weighted_degree_; }

  bool divides(const Monomial &other) const;
  /// other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial &other) const;

  friend Monomial operator*(const Monomial &a, const Monomial &b);
  friend bool operator==(const Monomial &a, const Monomial &b) {
    return a.factors_ == b.factors_;
  }

  std::size_t hash() const;

private:
  std::vector<Factor> factors_; // sorted by VarId, exponents > 0
  std::uint64_t weighted_degree_ = 0;
};

/// Canonical monomial order: larger weighted degree first, then walking the
/// variables in ascending (stream, index) the larger exponent comes first.
/// Returns true when `a` precedes `b`.
bool canonical_before(const Monomial &a, const Monomial &b);

struct CanonicalOrder {
  bool operator()(const Monomial &a, const Monomial &b) const { return canonical_before(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Integer coeff;

  friend bool operator==(const Term &, const Term &) = default;
};

/// Sparse polynomial in Z[S] with terms held in canonical order and no zero
/// coefficients. Values are immutable once built; all operations are pure.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(long c);
  Polynomial(const Integer &c);
  explicit Polynomial(Monomial m, Integer c = 1);

  static Polynomial variable(VarId v, std::uint32_t exponent = 1);
  /// Sorts and merges arbitrary terms; zero coefficients vanish.
  static Polynomial from_terms(std::vector<Term> terms);
  /// Trusts the caller: terms strictly canonical, no zero coefficients.
  static Polynomial from_canonical(std::vector<Term> terms);

  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Requires !is_zero().
  const Term &leading_term() const { return terms_.front(); }

  std::set<VarId> variables() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  Polynomial &operator+=(const Polynomial &b) { return *this = *this + b; }
  Polynomial &operator*=(const Polynomial &b) { return *this = *this * b; }

  Polynomial pow(std::uint32_t e) const;

  friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.terms_ == b.terms_; }

private:
  std::vector<Term> terms_;
};

/// Quotient of `num` by `den` when `den` divides `num` exactly in Z[S],
/// std::nullopt otherwise. Leading-term long division in the canonical
/// order: if num = q * den, every remainder is (q - partial) * den, so its
/// leading term is always divisible by den's leading term, and the first
/// indivisible leading term certifies non-divisibility.
/// Throws DomainError when `den` is zero.
std::optional<Polynomial> exact_div(const Polynomial &num, const Polynomial &den);

/// Ring homomorphism Z[s1, s2] -> Z[S], s1 -> s_r, s2 -> s_{2r}. Throws
/// DomainError if `p` uses any other variable.
Polynomial phi(const Polynomial &p, std::uint32_t r);

/// Relabels s_j to s_{stream,j}. `p` must only use stream-0 variables.
Polynomial upsilon(const Polynomial &p, std::uint32_t stream);

/// Exact evaluation. Throws DomainError if a variable of `p` is unassigned.
Integer specialize(const Polynomial &p, const std::map<VarId, Integer> &assignment);

/// Numerator/denominator pair with the divisibility verdict. Denominators are
/// never zero; when the quotient is present, quotient * denominator == numerator.
struct RationalForm {
  Polynomial numerator;
  Polynomial denominator{1};
  std::optional<Polynomial> quotient;

  bool is_polynomial() const { return quotient.has_value(); }

  /// Runs exact_div and records the verdict.
  static RationalForm divide(Polynomial numerator, Polynomial denominator);
  static RationalForm polynomial(Polynomial value);
};

// Text form, e.g. "s1*s3^3 + 2*s1*s3*s6 - s2_4". Stream-qualified variables
// print as s{stream}_{index}; a unit coefficient is omitted except on the
// constant term; the zero polynomial prints as "0".
std::string to_string(const Polynomial &p);
std::string to_string(VarId v);
Polynomial parse_polynomial(std::string_view text);

// JSON schema: {"terms":[{"coeff":"<decimal>","monomial":[[stream,index,exp],...]},...]}
std::string to_json(const Polynomial &p);
Polynomial polynomial_from_json(std::string_view json);

} // namespace lucastower

template <> struct std::hash<lucastower::Monomial> {
  std::size_t operator()(const lucastower::Monomial &m) const { return m.hash(); }
};
