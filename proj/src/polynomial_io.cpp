#include <cctype>
#include <limits>

#include <json.hpp>

#include "lucastower/errors.hpp"
#include "lucastower/polynomial.hpp"

namespace lucastower {

std::string to_string(VarId v) {
  if (v.stream == 0)
    return "s" + std::to_string(v.index);
  return "s" + std::to_string(v.stream) + "_" + std::to_string(v.index);
}

std::string to_string(const Polynomial &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &t : p.terms()) {
    Integer magnitude = abs(t.coeff);
    if (first)
      out += t.coeff < 0 ? "-" : "";
    else
      out += t.coeff < 0 ? " - " : " + ";
    first = false;

    bool need_star = false;
    if (magnitude != 1 || t.monomial.is_one()) {
      out += magnitude.get_str();
      need_star = true;
    }
    for (const auto &[v, e] : t.monomial.factors()) {
      if (need_star)
        out += '*';
      out += to_string(v);
      if (e != 1)
        out += '^' + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

namespace {

// Recursive-descent reader for
//   SIGN? TERM (("+"|"-") TERM)*
//   TERM := (COEFF | VAR ("^" EXP)?) ("*" VAR ("^" EXP)?)*
//   VAR  := "s" INDEX | "s" STREAM "_" INDEX
// Whitespace between tokens is ignored.
class Reader {
public:
  explicit Reader(std::string_view text) : text_(text) {}

  Polynomial polynomial() {
    std::vector<Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_space();
    }
    terms.push_back(term(negative));
    for (skip_space(); !at_end(); skip_space()) {
      char op = get();
      if (op != '+' && op != '-')
        fail("expected '+' or '-'");
      skip_space();
      terms.push_back(term(op == '-'));
    }
    return Polynomial::from_terms(std::move(terms));
  }

private:
  Term term(bool negative) {
    Integer coeff = 1;
    std::vector<Monomial::Factor> factors;
    bool first = true;
    do {
      skip_space();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        if (!first)
          fail("coefficient must lead its term");
        coeff = Integer(digits());
      } else if (peek() == 's') {
        factors.push_back(factor());
      } else {
        fail("expected a coefficient or a variable");
      }
      first = false;
      skip_space();
    } while (accept('*'));
    if (negative)
      coeff = -coeff;
    return Term{Monomial::from_factors(std::move(factors)), coeff};
  }

  Monomial::Factor factor() {
    get(); // 's'
    std::uint32_t first = number("variable index");
    VarId v{0, first};
    if (accept('_'))
      v = VarId{first, number("variable index")};
    if (v.index == 0)
      fail("variable index must be positive");
    std::uint32_t e = 1;
    skip_space();
    if (accept('^')) {
      skip_space();
      e = number("exponent");
    }
    return {v, e};
  }

  std::uint32_t number(const char *what) {
    std::string d = digits();
    if (d.empty())
      fail(std::string("expected ") + what);
    unsigned long long value = std::stoull(d);
    if (d.size() > 10 || value > std::numeric_limits<std::uint32_t>::max())
      fail(std::string(what) + " out of range");
    return static_cast<std::uint32_t>(value);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      d += get();
    return d;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void skip_space() {
    while (std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError("polynomial text, offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text) { return Reader(text).polynomial(); }

std::string to_json(const Polynomial &p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto &t : p.terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto &[v, e] : t.monomial.factors())
      mono.push_back({v.stream, v.index, e});
    terms.push_back({{"coeff", t.coeff.get_str()}, {"monomial", std::move(mono)}});
  }
  return nlohmann::json{{"terms", std::move(terms)}}.dump();
}

Polynomial polynomial_from_json(std::string_view json) {
  try {
    auto doc = nlohmann::json::parse(json);
    std::vector<Term> terms;
    for (const auto &t : doc.at("terms")) {
      Integer coeff;
      if (coeff.set_str(t.at("coeff").get<std::string>(), 10) != 0)
        throw ParseError("polynomial JSON: coefficient is not a decimal integer");
      std::vector<Monomial::Factor> factors;
      for (const auto &f : t.at("monomial")) {
        if (!f.is_array() || f.size() != 3)
          throw ParseError("polynomial JSON: monomial entries are [stream,index,exp]");
        VarId v{f[0].get<std::uint32_t>(), f[1].get<std::uint32_t>()};
        if (v.index == 0)
          throw ParseError("polynomial JSON: variable index must be positive");
        factors.emplace_back(v, f[2].get<std::uint32_t>());
      }
      terms.push_back(Term{Monomial::from_factors(std::move(factors)), std::move(coeff)});
    }
    return Polynomial::from_terms(std::move(terms));
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
}

} // namespace lucastower
