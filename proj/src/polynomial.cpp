#include "lucastower/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "lucastower/errors.hpp"

namespace lucastower {

// Monomial

Monomial Monomial::variable(VarId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(v, exponent);
    m.weighted_degree_ = std::uint64_t{v.index} * exponent;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor &a, const Factor &b) { return a.first < b.first; });
  Monomial m;
  for (const auto &[v, e] : factors) {
    if (e == 0)
      continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
    m.weighted_degree_ += std::uint64_t{v.index} * e;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor &f, VarId key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial &other) const {
  if (weighted_degree_ > other.weighted_degree_)
    return false;
  auto it = other.factors_.begin();
  for (const auto &[v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v)
      ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e)
      return false;
  }
  return true;
}

Monomial Monomial::cofactor_in(const Monomial &other) const {
  Monomial q;
  auto mine = factors_.begin();
  for (const auto &[v, e] : other.factors_) {
    std::uint32_t sub = 0;
    if (mine != factors_.end() && mine->first == v) {
      sub = mine->second;
      ++mine;
    }
    if (e > sub) {
      q.factors_.emplace_back(v, e - sub);
      q.weighted_degree_ += std::uint64_t{v.index} * (e - sub);
    }
  }
  return q;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.weighted_degree_ = a.weighted_degree_ + b.weighted_degree_;
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto &[v, e] : factors_) {
    std::uint64_t word = (std::uint64_t{v.stream} << 40) ^ (std::uint64_t{v.index} << 16) ^ e;
    h ^= word + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool canonical_before(const Monomial &a, const Monomial &b) {
  if (a.weighted_degree() != b.weighted_degree())
    return a.weighted_degree() > b.weighted_degree();
  const auto &fa = a.factors();
  const auto &fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first)
      // the side holding the smaller variable has the larger exponent there
      return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second)
      return fa[i].second > fb[i].second;
  }
  return i < fa.size() && i == fb.size();
}

// Polynomial

Polynomial::Polynomial(long c) : Polynomial(Integer(c)) {}

Polynomial::Polynomial(const Integer &c) {
  if (c != 0)
    terms_.push_back(Term{Monomial{}, c});
}

Polynomial::Polynomial(Monomial m, Integer c) {
  if (c != 0)
    terms_.push_back(Term{std::move(m), std::move(c)});
}

Polynomial Polynomial::variable(VarId v, std::uint32_t exponent) {
  return Polynomial(Monomial::variable(v, exponent));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) {
    return canonical_before(a.monomial, b.monomial);
  });
  Polynomial p;
  for (auto &t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term &t) { return t.coeff == 0; });
  return p;
}

Polynomial Polynomial::from_canonical(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff == 1;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> vars;
  for (const auto &t : terms_)
    for (const auto &f : t.monomial.factors())
      vars.insert(f.first);
  return vars;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto &t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two canonically ordered term lists.
Polynomial merge(const Polynomial &a, const Polynomial &b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  auto push_b = [&](const Term &t) {
    out.push_back(subtract ? Term{t.monomial, -t.coeff} : t);
  };
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end()) {
      out.push_back(*i++);
    } else if (i == a.terms().end()) {
      push_b(*j++);
    } else if (i->monomial == j->monomial) {
      Integer c = subtract ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
      if (c != 0)
        out.push_back(Term{i->monomial, std::move(c)});
      ++i;
      ++j;
    } else if (canonical_before(i->monomial, j->monomial)) {
      out.push_back(*i++);
    } else {
      push_b(*j++);
    }
  }
  return Polynomial::from_canonical(std::move(out));
}

} // namespace

Polynomial operator+(const Polynomial &a, const Polynomial &b) { return merge(a, b, false); }

Polynomial operator-(const Polynomial &a, const Polynomial &b) { return merge(a, b, true); }

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  if (a.is_one())
    return b;
  if (b.is_one())
    return a;
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto &ta : a.terms())
    for (const auto &tb : b.terms()) {
      auto [it, inserted] = acc.try_emplace(ta.monomial * tb.monomial);
      mpz_addmul(it->second.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto &[m, c] : acc)
    if (c != 0)
      terms.push_back(Term{m, std::move(c)});
  return Polynomial::from_terms(std::move(terms));
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U)
      result = result * base;
    e >>= 1U;
    if (e > 0)
      base = base * base;
  }
  return result;
}

// Division and homomorphisms

std::optional<Polynomial> exact_div(const Polynomial &num, const Polynomial &den) {
  if (den.is_zero())
    throw DomainError("exact_div: division by the zero polynomial");
  if (num.is_zero())
    return Polynomial{};
  if (den.is_one())
    return num;

  const Term &lead = den.leading_term();
  std::map<Monomial, Integer, CanonicalOrder> rem;
  for (const auto &t : num.terms())
    rem.emplace(t.monomial, t.coeff);

  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.monomial.divides(top->first) || !mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t()))
      return std::nullopt;
    Term q{lead.monomial.cofactor_in(top->first), 0};
    mpz_divexact(q.coeff.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
    for (const auto &t : den.terms()) {
      auto [it, inserted] = rem.try_emplace(q.monomial * t.monomial);
      mpz_submul(it->second.get_mpz_t(), q.coeff.get_mpz_t(), t.coeff.get_mpz_t());
      if (it->second == 0)
        rem.erase(it);
    }
    quotient.push_back(std::move(q));
  }
  // quotient terms come out strictly decreasing
  return Polynomial::from_canonical(std::move(quotient));
}

namespace {

template <class Map>
Polynomial relabel(const Polynomial &p, Map &&map) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto &t : p.terms()) {
    std::vector<Monomial::Factor> f;
    f.reserve(t.monomial.factors().size());
    for (const auto &[v, e] : t.monomial.factors())
      f.emplace_back(map(v), e);
    terms.push_back(Term{Monomial::from_factors(std::move(f)), t.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

} // namespace

Polynomial phi(const Polynomial &p, std::uint32_t r) {
  if (r == 0)
    throw DomainError("phi: r must be positive");
  return relabel(p, [r](VarId v) {
    if (v.stream != 0 || (v.index != 1 && v.index != 2))
      throw DomainError("phi: variable " + to_string(v) + " is outside Z[s1, s2]");
    return VarId{0, v.index * r};
  });
}

Polynomial upsilon(const Polynomial &p, std::uint32_t stream) {
  if (stream == 0)
    throw DomainError("upsilon: target stream must be positive");
  return relabel(p, [stream](VarId v) {
    if (v.stream != 0)
      throw DomainError("upsilon: variable " + to_string(v) + " already carries a stream");
    return VarId{stream, v.index};
  });
}

Integer specialize(const Polynomial &p, const std::map<VarId, Integer> &assignment) {
  Integer total = 0;
  for (const auto &t : p.terms()) {
    Integer value = t.coeff;
    for (const auto &[v, e] : t.monomial.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw DomainError("specialize: no value for " + to_string(v));
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), it->second.get_mpz_t(), e);
      value *= power;
    }
    total += value;
  }
  return total;
}

RationalForm RationalForm::divide(Polynomial numerator, Polynomial denominator) {
  RationalForm f;
  f.quotient = exact_div(numerator, denominator);
  f.numerator = std::move(numerator);
  f.denominator = std::move(denominator);
  return f;
}

RationalForm RationalForm::polynomial(Polynomial value) {
  RationalForm f;
  f.numerator = value;
  f.quotient = std::move(value);
  return f;
}

} // namespace lucastower
