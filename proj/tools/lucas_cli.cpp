// Command-line front end. Talks to the library only through lucastower.h.
//
// Exit status: 0 on success, 1 when a computation rejects its input
// (n > m, bad R-sequence, oracle bound exceeded), 2 on usage errors.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lucastower.h"

namespace {

using json = nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr std::uint32_t kDefaultOracleBound = 22;

struct DomainFailure {
  std::string message;
};

template <class T, void (*Free)(T *)>
struct Deleter {
  void operator()(T *p) const { Free(p); }
};
using Poly = std::unique_ptr<lt_poly, Deleter<lt_poly, lt_poly_free>>;
using Rational = std::unique_ptr<lt_rational, Deleter<lt_rational, lt_rational_free>>;
using Series = std::unique_ptr<lt_series, Deleter<lt_series, lt_series_free>>;
using Words = std::unique_ptr<lt_words, Deleter<lt_words, lt_words_free>>;
using Tilings = std::unique_ptr<lt_tilings, Deleter<lt_tilings, lt_tilings_free>>;
using CString = std::unique_ptr<char, Deleter<char, lt_string_free>>;

void check(lt_status status) {
  if (status == LT_OK)
    return;
  if (status == LT_ERR_DOMAIN || status == LT_ERR_PARSE)
    throw DomainFailure{lt_last_error()};
  throw std::runtime_error(lt_last_error());
}

template <class Handle, class Call>
Handle make(Call &&call) {
  typename Handle::pointer raw = nullptr;
  check(call(&raw));
  return Handle(raw);
}

std::string text(const lt_poly *p) {
  char *raw = nullptr;
  check(lt_poly_to_string(p, &raw));
  return CString(raw).get();
}

json to_json(const lt_poly *p) {
  char *raw = nullptr;
  check(lt_poly_to_json(p, &raw));
  return json::parse(CString(raw).get());
}

struct Options {
  std::string format = "pretty";
  std::optional<std::uint32_t> max_oracle;
  bool force = false;

  bool json_mode() const { return format == "json"; }
};

class Output {
public:
  explicit Output(const Options &opts) : opts_(opts) {}

  void poly(const lt_poly *p) const {
    if (opts_.json_mode())
      std::cout << to_json(p).dump() << '\n';
    else
      std::cout << text(p) << '\n';
  }

  // Verdict line first, then either the quotient or the unreduced pair.
  void verdict(const lt_rational *q, bool sufficient, const char *sufficient_label) const {
    const bool is_poly = lt_rational_is_polynomial(q) == 1;
    auto num = make<Poly>([&](lt_poly **o) { return lt_rational_numerator(q, o); });
    auto den = make<Poly>([&](lt_poly **o) { return lt_rational_denominator(q, o); });
    Poly value;
    if (is_poly)
      value = make<Poly>([&](lt_poly **o) { return lt_rational_quotient(q, o); });
    if (opts_.json_mode()) {
      json j{{"polynomial", is_poly},
             {"sufficient_condition", sufficient},
             {"value", is_poly ? to_json(value.get()) : json(nullptr)},
             {"numerator", to_json(num.get())},
             {"denominator", to_json(den.get())}};
      std::cout << j.dump() << '\n';
      return;
    }
    std::cout << (is_poly ? "POLYNOMIAL" : "NOT POLYNOMIAL") << '\n';
    if (is_poly) {
      std::cout << text(value.get()) << '\n';
    } else {
      std::cout << "numerator: " << text(num.get()) << '\n';
      std::cout << "denominator: " << text(den.get()) << '\n';
    }
    std::cout << sufficient_label << ": " << (sufficient ? "yes" : "no") << '\n';
  }

  const Options &options() const { return opts_; }

private:
  const Options &opts_;
};

std::vector<std::uint32_t> parse_rs(const std::string &list) {
  std::vector<std::uint32_t> rs;
  if (list.empty())
    return rs;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      throw CLI::ValidationError("--rs", "'" + list + "' is not a comma-separated list of integers");
    rs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (!list.empty() && list.back() == ',')
    throw CLI::ValidationError("--rs", "'" + list + "' has a trailing comma");
  return rs;
}

std::uint32_t oracle_bound(const Options &opts) {
  if (opts.max_oracle)
    return *opts.max_oracle;
  if (const char *env = std::getenv("LUCAS_MAX_ORACLE")) {
    try {
      return static_cast<std::uint32_t>(std::stoul(env));
    } catch (const std::exception &) {
      throw CLI::ValidationError("LUCAS_MAX_ORACLE", std::string("'") + env + "' is not an integer");
    }
  }
  return kDefaultOracleBound;
}

void guard_oracle(const Options &opts, std::uint32_t m) {
  const std::uint32_t bound = oracle_bound(opts);
  if (m > bound && !opts.force)
    throw DomainFailure{"oracle enumeration is exponential: m = " + std::to_string(m) + " exceeds the bound " +
                        std::to_string(bound) + " (raise --max-oracle / LUCAS_MAX_ORACLE or pass --force)"};
}

void emit_words(const Output &out, const lt_words *w) {
  auto sum = make<Poly>([&](lt_poly **o) { return lt_words_weight_sum(w, o); });
  const size_t count = lt_words_count(w);
  if (out.options().json_mode()) {
    json objects = json::array();
    for (size_t i = 0; i < count; ++i) {
      json word = json::array();
      for (size_t j = 0; j < lt_words_length(w, i); ++j)
        word.push_back(lt_words_tile(w, i, j));
      objects.push_back(std::move(word));
    }
    std::cout << json{{"count", count}, {"objects", std::move(objects)}, {"weight_sum", to_json(sum.get())}}.dump()
              << '\n';
    return;
  }
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = 0; j < lt_words_length(w, i); ++j)
      std::cout << (j ? " " : "") << lt_words_tile(w, i, j);
    std::cout << (lt_words_length(w, i) == 0 ? "(empty)" : "") << '\n';
  }
  std::cout << "count: " << count << '\n' << "weight: " << text(sum.get()) << '\n';
}

void emit_tilings(const Output &out, const lt_tilings *t) {
  auto sum = make<Poly>([&](lt_poly **o) { return lt_tilings_weight_sum(t, o); });
  const size_t count = lt_tilings_count(t);
  auto row_json = [&](size_t i, size_t row) {
    json r = json::array();
    for (size_t j = 0; j < lt_tilings_row_length(t, i, row); ++j)
      r.push_back(lt_tilings_tile(t, i, row, j));
    return r;
  };
  if (out.options().json_mode()) {
    json objects = json::array();
    for (size_t i = 0; i < count; ++i) {
      json rows = json::array();
      for (size_t row = 0; row < lt_tilings_row_count(t, i); ++row)
        rows.push_back(row_json(i, row));
      objects.push_back({{"path", lt_tilings_path(t, i)}, {"rows", std::move(rows)}});
    }
    std::cout << json{{"count", count}, {"objects", std::move(objects)}, {"weight_sum", to_json(sum.get())}}.dump()
              << '\n';
    return;
  }
  for (size_t i = 0; i < count; ++i) {
    std::cout << lt_tilings_path(t, i) << " |";
    for (size_t row = 0; row < lt_tilings_row_count(t, i); ++row)
      std::cout << ' ' << row_json(i, row).dump();
    std::cout << '\n';
  }
  std::cout << "count: " << count << '\n' << "weight: " << text(sum.get()) << '\n';
}

int run(int argc, char **argv) {
  CLI::App app{"Exact Lucas, r-Lucas and R-Lucas polynomials with tiling oracles", "lucas"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand
  Options opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"pretty", "json"}));
  app.add_option("--max-oracle", opts.max_oracle, "Largest m the oracle subcommands accept (default 22)");
  app.add_flag("--force", opts.force, "Run oracle enumerations past the bound");
  Output out(opts);

  std::uint32_t m = 0, n = 0, r = 1, order = 0;
  std::string rs_text;
  std::function<void()> action;

  auto add_m = [&](CLI::App *sub) { sub->add_option("m", m, "index m")->required(); };
  auto add_mn = [&](CLI::App *sub) {
    add_m(sub);
    sub->add_option("n", n, "index n")->required();
  };
  auto add_r = [&](CLI::App *sub) { sub->add_option("--r", r, "r >= 1")->required(); };
  auto add_rs = [&](CLI::App *sub, bool required) {
    auto *o = sub->add_option("--rs", rs_text, "strictly decreasing list, e.g. 9,3");
    if (required)
      o->required();
  };
  auto rs = [&] { return parse_rs(rs_text); };
  auto poly_action = [&](CLI::App *sub, auto compute) {
    sub->callback([&, compute] {
      action = [&, compute] { out.poly(make<Poly>(compute).get()); };
    });
  };

  auto *lucas_cmd = app.add_subcommand("lucas", "Lucas polynomial {m}");
  add_m(lucas_cmd);
  poly_action(lucas_cmd, [&](lt_poly **o) { return lt_lucas(m, o); });

  auto *lucanomial_cmd = app.add_subcommand("lucanomial", "Lucanomial {m choose n}");
  add_mn(lucanomial_cmd);
  poly_action(lucanomial_cmd, [&](lt_poly **o) { return lt_lucanomial(m, n, o); });

  auto *catalan_cmd = app.add_subcommand("catalan", "Lucas Catalan analogue");
  add_m(catalan_cmd);
  poly_action(catalan_cmd, [&](lt_poly **o) { return lt_lucas_catalan(m, o); });

  auto *rlucas_cmd = app.add_subcommand("rlucas", "r-Lucas polynomial {m}_r");
  add_m(rlucas_cmd);
  add_r(rlucas_cmd);
  poly_action(rlucas_cmd, [&](lt_poly **o) { return lt_r_lucas(m, r, o); });

  auto *rbinom_cmd = app.add_subcommand("rbinom", "r-Lucanomial {m choose n}_r");
  add_mn(rbinom_cmd);
  add_r(rbinom_cmd);
  poly_action(rbinom_cmd, [&](lt_poly **o) { return lt_r_lucanomial(m, n, r, o); });

  auto *rcatalan_cmd = app.add_subcommand("rcatalan", "r-Catalan analogue with polynomiality verdict");
  add_m(rcatalan_cmd);
  add_r(rcatalan_cmd);
  rcatalan_cmd->callback([&] {
    action = [&] {
      int sufficient = 0;
      auto q = make<Rational>([&](lt_rational **o) { return lt_r_catalan(m, r, o, &sufficient); });
      out.verdict(q.get(), sufficient != 0, "sufficient condition (m mod r < r/2)");
    };
  });

  auto *mlucas_cmd = app.add_subcommand("mlucas", "R-Lucas polynomial {m}_R");
  add_m(mlucas_cmd);
  add_rs(mlucas_cmd, true);
  poly_action(mlucas_cmd, [&](lt_poly **o) {
    auto list = rs();
    return lt_m_sub_r(m, list.data(), list.size(), o);
  });

  auto *mbinom_cmd = app.add_subcommand("mbinom", "R-Lucas binomial with polynomiality verdict");
  add_mn(mbinom_cmd);
  add_rs(mbinom_cmd, true);
  mbinom_cmd->callback([&] {
    action = [&] {
      auto list = rs();
      int sufficient = 0;
      check(lt_sufficient_condition(m, n, list.data(), list.size(), &sufficient));
      auto q = make<Rational>([&](lt_rational **o) { return lt_binomial_r(m, n, list.data(), list.size(), o); });
      out.verdict(q.get(), sufficient != 0, "sufficient condition (nu_i = alpha_i + beta_i)");
    };
  });

  auto *series_cmd = app.add_subcommand("series", "Coefficients of the generating function L_R(x)");
  add_rs(series_cmd, true);
  series_cmd->add_option("--order", order, "truncation order")->required();
  series_cmd->callback([&] {
    action = [&] {
      auto list = rs();
      auto s = make<Series>([&](lt_series **o) { return lt_l_series(list.data(), list.size(), order, o); });
      json coeffs = json::array();
      for (std::uint32_t k = 0; k <= lt_series_order(s.get()); ++k) {
        auto c = make<Poly>([&](lt_poly **o) { return lt_series_coeff(s.get(), k, o); });
        if (opts.json_mode())
          coeffs.push_back(to_json(c.get()));
        else
          std::cout << "x^" << k << ": " << text(c.get()) << '\n';
      }
      if (opts.json_mode())
        std::cout << coeffs.dump() << '\n';
    };
  });

  auto *gamma_cmd = app.add_subcommand("gamma", "Exponent of s1 in the r-Lucanomial");
  add_mn(gamma_cmd);
  add_r(gamma_cmd);
  gamma_cmd->callback([&] {
    action = [&] {
      std::uint64_t g = 0;
      check(lt_gamma_r(m, n, r, &g));
      if (opts.json_mode())
        std::cout << json{{"gamma", g}}.dump() << '\n';
      else
        std::cout << g << '\n';
    };
  });

  auto *matching_cmd = app.add_subcommand("matching", "Column matching M* = N* + K*");
  add_mn(matching_cmd);
  add_r(matching_cmd);
  matching_cmd->callback([&] {
    action = [&] {
      std::vector<std::uint32_t> ms(r), ns(r), ks(r);
      int proof_case = 0;
      check(lt_matching(m, n, r, ms.data(), ns.data(), ks.data(), r, &proof_case));
      if (opts.json_mode()) {
        std::cout << json{{"M", ms}, {"N", ns}, {"K", ks}, {"case", proof_case}}.dump() << '\n';
        return;
      }
      auto row = [](const char *label, const std::vector<std::uint32_t> &v) {
        std::cout << label;
        for (auto x : v)
          std::cout << ' ' << x;
        std::cout << '\n';
      };
      row("M*:", ms);
      row("N*:", ns);
      row("K*:", ks);
      std::cout << "case: " << proof_case << '\n';
    };
  });

  auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force tiling enumerations");
  oracle_cmd->require_subcommand(1);

  auto *delta = oracle_cmd->add_subcommand("delta", "Monomino/domino tilings of m cells");
  add_m(delta);
  delta->callback([&] {
    action = [&] {
      guard_oracle(opts, m);
      emit_words(out, make<Words>([&](lt_words **o) { return lt_oracle_delta(m, o); }).get());
    };
  });

  auto *delta_r = oracle_cmd->add_subcommand("delta-r", "Prefixed tilings by r and 2r");
  add_m(delta_r);
  add_r(delta_r);
  delta_r->callback([&] {
    action = [&] {
      guard_oracle(opts, m);
      emit_words(out, make<Words>([&](lt_words **o) { return lt_oracle_delta_r(m, r, o); }).get());
    };
  });

  auto *delta_R = oracle_cmd->add_subcommand("delta-R", "Nested tilings for an R-sequence");
  add_m(delta_R);
  add_rs(delta_R, true);
  delta_R->callback([&] {
    action = [&] {
      guard_oracle(opts, m);
      auto list = rs();
      emit_words(out,
                 make<Words>([&](lt_words **o) { return lt_oracle_delta_R(m, list.data(), list.size(), o); }).get());
    };
  });

  auto *paths = oracle_cmd->add_subcommand("paths", "Binomial partial tilings of delta_m");
  add_mn(paths);
  paths->callback([&] {
    action = [&] {
      guard_oracle(opts, m);
      emit_tilings(out, make<Tilings>([&](lt_tilings **o) { return lt_oracle_binomial_tilings(m, n, 1, o); }).get());
    };
  });

  auto *r_paths = oracle_cmd->add_subcommand("r-paths", "r-binomial partial tilings of r*delta_m");
  add_mn(r_paths);
  add_r(r_paths);
  r_paths->callback([&] {
    action = [&] {
      guard_oracle(opts, m);
      emit_tilings(out, make<Tilings>([&](lt_tilings **o) { return lt_oracle_binomial_tilings(m, n, r, o); }).get());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    action();
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainFailure &e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitDomain;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
