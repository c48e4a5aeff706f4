#include "cli.hpp"

#include "bircalc/curve_catalog.hpp"
#include "bircalc/error.hpp"
#include "bircalc/graded_poly.hpp"
#include "bircalc/picard_lattice.hpp"
#include "bircalc/verification.hpp"
#include "bircalc/weighted_blowup.hpp"
#include "bircalc/word_engine.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>

namespace bircalc::cli {

namespace {

using nlohmann::json;

constexpr const char* kSeparator = "\x1f--";

struct Context {
  std::ostream& out;
  std::string format = "human";
  std::string catalog_path;
  int exit_code = 0;

  bool json_lines() const { return format == "json-lines"; }
  void emit(const json& record) { out << record.dump() << '\n'; }
};

json word_json(const Word& w) {
  json letters = json::array();
  for (const auto& letter : w) letters.push_back(to_string(letter));
  return letters;
}

Word join_word(const std::vector<std::string>& tokens) {
  std::string text;
  for (const auto& t : tokens) text += t + " ";
  return parse_word(text);
}

std::pair<std::int64_t, std::int64_t> blowup_weights(const std::string& text) {
  const auto w = parse_weights(text);
  if (w.size() != 2) throw ParseError("--weights expects two integers a,b");
  return {w[0], w[1]};
}

std::string resolve_catalog_path(const Context& ctx) {
  if (!ctx.catalog_path.empty()) return ctx.catalog_path;
  if (const char* env = std::getenv("BIRCALC_CATALOG")) return env;
  return {};
}

FreeProduct word_group(const Context& ctx) {
  const auto path = resolve_catalog_path(ctx);
  if (path.empty()) return FreeProduct{};
  return FreeProduct(load_catalog_file(path));
}

struct CurveArgs {
  std::string space;
  std::int64_t genus = 0;
  std::int64_t degree = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--space", space, "Ambient threefold")->required()->check(CLI::IsMember({"p3", "cubic"}));
    cmd->add_option("--genus", genus, "Curve genus")->required();
    cmd->add_option("--degree", degree, "Curve degree")->required();
  }
  AmbientSpace ambient() const { return AmbientSpace::parse(space); }
  GenusDegree gd() const { return {genus, degree}; }
};

void add_degree(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("degree", "Degree of the involution chi_C with respect to H");
  auto args = std::make_shared<CurveArgs>();
  args->attach(cmd);
  cmd->callback([&ctx, args] {
    const auto deg = link_degree(args->ambient(), args->gd());
    if (ctx.json_lines())
      ctx.emit({{"space", args->space}, {"genus", args->genus}, {"degree", args->degree}, {"link_degree", deg}});
    else
      ctx.out << deg << '\n';
  });
}

void add_acprofile(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("acprofile", "Anticanonical ring profile h0(-nK_X) against free dimensions");
  auto args = std::make_shared<CurveArgs>();
  auto n_max = std::make_shared<std::int64_t>(12);
  args->attach(cmd);
  cmd->add_option("--nmax", *n_max, "Largest degree n (at least 7)")->capture_default_str();
  cmd->callback([&ctx, args, n_max] {
    const BlowupLattice lattice(args->ambient(), args->gd());
    const auto profile = graded_ring_profile(lattice, *n_max);
    if (ctx.json_lines()) {
      for (const auto& row : profile.rows)
        ctx.emit({{"n", row.n}, {"rr", row.rr}, {"free", row.free}, {"gens", row.new_generators},
                  {"rels", row.new_relations}});
      return;
    }
    ctx.out << std::setw(4) << "n" << std::setw(8) << "rr" << std::setw(8) << "free" << std::setw(6) << "gens"
            << std::setw(6) << "rels" << '\n';
    for (const auto& row : profile.rows)
      ctx.out << std::setw(4) << row.n << std::setw(8) << row.rr << std::setw(8) << row.free << std::setw(6)
              << row.new_generators << std::setw(6) << row.new_relations << '\n';
  });
}

void add_blowup(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("blowup", "Arithmetic of (1,a,b)-blowups of smooth points");
  group->require_subcommand(1);
  auto weights = std::make_shared<std::string>();

  auto* disc = group->add_subcommand("disc", "Discrepancy a+b");
  disc->add_option("--weights", *weights, "a,b")->required();
  disc->callback([&ctx, weights] {
    const auto [a, b] = blowup_weights(*weights);
    const WeightedBlowup bl(a, b);
    if (ctx.json_lines())
      ctx.emit({{"a", bl.a()}, {"b", bl.b()}, {"discrepancy", discrepancy(bl)}});
    else
      ctx.out << discrepancy(bl) << '\n';
  });

  auto* exc = group->add_subcommand("exc", "E . strict transform of {f = g = 0}");
  auto f = std::make_shared<std::string>();
  auto g = std::make_shared<std::string>();
  exc->add_option("--weights", *weights, "a,b")->required();
  exc->add_option("--f", *f, "First polynomial in x1,x2,x3")->required();
  exc->add_option("--g", *g, "Second polynomial in x1,x2,x3")->required();
  exc->callback([&ctx, weights, f, g] {
    const auto [a, b] = blowup_weights(*weights);
    const WeightedBlowup bl(a, b);
    const std::vector<std::int64_t> w{1, a, b};
    const auto value = exceptional_intersection(bl, GradedPolynomial::parse(*f, w), GradedPolynomial::parse(*g, w));
    if (ctx.json_lines())
      ctx.emit({{"a", bl.a()}, {"b", bl.b()}, {"intersection", to_string(value)}});
    else
      ctx.out << to_string(value) << '\n';
  });

  auto* defect = group->add_subcommand("defect", "n (2 - (a+b)^2/(ab) v_H)");
  auto v_h = std::make_shared<std::int64_t>();
  auto n = std::make_shared<std::int64_t>();
  defect->add_option("--weights", *weights, "a,b")->required();
  defect->add_option("--vh", *v_h, "Valuation of the hyperplane section")->required();
  defect->add_option("--n", *n, "Multiple of -K")->required();
  defect->callback([&ctx, weights, v_h, n] {
    const auto [a, b] = blowup_weights(*weights);
    const auto value = anticanonical_defect(WeightedBlowup(a, b), *v_h, *n);
    if (ctx.json_lines())
      ctx.emit({{"defect", to_string(value)}, {"negative", value < 0}});
    else
      ctx.out << to_string(value) << '\n';
  });

  auto* gap = group->add_subcommand("gap", "Margins of (a+b)^2/(ab) above 2 and above 4");
  gap->add_option("--weights", *weights, "a,b")->required();
  gap->callback([&ctx, weights] {
    const auto [a, b] = blowup_weights(*weights);
    const auto cert = strict_positivity_check(WeightedBlowup(a, b));
    if (ctx.json_lines()) {
      ctx.emit({{"ratio", to_string(cert.ratio)}, {"gap_over_two", to_string(cert.gap_over_two)},
                {"gap_over_four", to_string(cert.gap_over_four)},
                {"strictly_greater_than_two", cert.strictly_greater_than_two}});
    } else {
      ctx.out << "ratio " << to_string(cert.ratio) << "\ngap over 2: " << to_string(cert.gap_over_two)
              << "\ngap over 4: " << to_string(cert.gap_over_four) << '\n';
    }
  });
}

void add_poly(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("poly", "Weighted polynomial valuation and charts");
  group->require_subcommand(1);
  auto weights = std::make_shared<std::string>();
  auto f = std::make_shared<std::string>();
  auto attach = [&](CLI::App* cmd) {
    cmd->add_option("--weights", *weights, "w1,...,wn")->required();
    cmd->add_option("--f", *f, "Polynomial in x1..xn")->required();
  };

  auto* val = group->add_subcommand("val", "Weighted valuation");
  attach(val);
  val->callback([&ctx, weights, f] {
    const auto v = weighted_valuation(GradedPolynomial::parse(*f, parse_weights(*weights)));
    if (ctx.json_lines())
      ctx.emit({{"valuation", v}});
    else
      ctx.out << v << '\n';
  });

  auto* dec = group->add_subcommand("decompose", "Weighted-homogeneous parts");
  attach(dec);
  dec->callback([&ctx, weights, f] {
    for (const auto& [degree, part] : homogeneous_decomposition(GradedPolynomial::parse(*f, parse_weights(*weights)))) {
      if (ctx.json_lines())
        ctx.emit({{"degree", degree}, {"part", part.to_string()}});
      else
        ctx.out << degree << ": " << part.to_string() << '\n';
    }
  });

  auto* pull = group->add_subcommand("pullback", "Chart pullback x_i -> u^{w_i} x_i");
  attach(pull);
  pull->callback([&ctx, weights, f] {
    const auto [k, strict] = chart_pullback(GradedPolynomial::parse(*f, parse_weights(*weights)));
    // Strict transform variables are printed shifted: x1 is u.
    if (ctx.json_lines())
      ctx.emit({{"u_power", k}, {"strict_transform", strict.to_string()}});
    else
      ctx.out << "u^" << k << " * (" << strict.to_string() << ")  [x1 = u]\n";
  });
}

void add_catalog(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("catalog", "Curve catalogs and Hilbert-scheme bounds");
  group->require_subcommand(1);

  auto* check = group->add_subcommand("check", "Validate a catalog file");
  auto path = std::make_shared<std::string>();
  check->add_option("file", *path, "Catalog file")->required();
  check->callback([&ctx, path] {
    const auto catalog = load_catalog_file(*path);
    const auto flagged = std::count_if(catalog.entries().begin(), catalog.entries().end(),
                                       [](const CatalogEntry& e) { return e.automorphism_free; });
    if (ctx.json_lines())
      ctx.emit({{"entries", catalog.size()}, {"automorphism_free", flagged}});
    else
      ctx.out << "ok: " << catalog.size() << " entries, " << flagged << " automorphism_free\n";
  });

  auto* bounds = group->add_subcommand("bounds", "dim S_{g,d} bounds");
  auto args = std::make_shared<CurveArgs>();
  args->attach(bounds);
  bounds->callback([&ctx, args] {
    const auto b = hilbert_dim_bounds(args->ambient(), args->gd());
    const auto serre = serre_dual_degree(args->ambient(), args->gd());
    if (ctx.json_lines()) {
      ctx.emit({{"lower", b.lower}, {"upper", b.upper}, {"exceeds_aut", b.exceeds_aut}, {"serre_dual_degree", serre}});
    } else {
      ctx.out << b.lower << " <= dim S <= " << b.upper << "\nexceeds dim Aut(Y): " << (b.exceeds_aut ? "yes" : "no")
              << "\n2g-2+K.C = " << serre << '\n';
    }
  });
}

void emit_word(Context& ctx, const Word& w) {
  if (ctx.json_lines())
    ctx.emit({{"word", word_json(w)}});
  else
    ctx.out << to_string(w) << '\n';
}

void add_word(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("word", "Word calculus in G * (*_J Z/2Z)");
  group->require_subcommand(1);
  group->add_option("--catalog", ctx.catalog_path, "Catalog restricting chi labels (or BIRCALC_CATALOG)");
  auto tokens = std::make_shared<std::vector<std::string>>();
  auto perm = std::make_shared<std::string>();

  auto unary = [&](const char* name, const char* help, std::function<Word(const FreeProduct&, const Word&)> op) {
    auto* cmd = group->add_subcommand(name, help);
    cmd->add_option("letters", *tokens, "Letters g:<sym>^<exp> and chi:<label>");
    cmd->callback([&ctx, tokens, op] { emit_word(ctx, op(word_group(ctx), join_word(*tokens))); });
    return cmd;
  };
  unary("normalize", "Free-product normal form", [](const FreeProduct& G, const Word& w) { return G.normalize(w); });
  unary("psi", "Image in *_J Z/2Z", [](const FreeProduct& G, const Word& w) { return G.psi(w); });
  auto* phi = unary("phi", "Apply phi(rho)", [perm](const FreeProduct& G, const Word& w) {
    return G.phi_automorphism(IndexPermutation::parse(*perm), w);
  });
  phi->add_option("--perm", *perm, "Permutation in cycle notation")->required();

  auto* dec = group->add_subcommand("decompose", "w = n * s with psi(n) = 1 and s in the section");
  dec->add_option("letters", *tokens, "Letters");
  dec->callback([&ctx, tokens] {
    const auto [n, s] = word_group(ctx).kernel_decompose(join_word(*tokens));
    if (ctx.json_lines())
      ctx.emit({{"kernel", word_json(n)}, {"section", word_json(s)}});
    else
      ctx.out << "kernel: " << to_string(n) << "\nsection: " << to_string(s) << '\n';
  });

  auto* conj = group->add_subcommand("conj", "Conjugacy test: word conj <w1> -- <w2>");
  conj->add_option("letters", *tokens, "Letters of w1, then --, then letters of w2")->required();
  conj->callback([&ctx, tokens] {
    const auto sep = std::find(tokens->begin(), tokens->end(), kSeparator);
    if (sep == tokens->end()) throw ParseError("word conj expects <w1> -- <w2>");
    const std::vector<std::string> lhs(tokens->begin(), sep);
    const std::vector<std::string> rhs(sep + 1, tokens->end());
    const bool result = word_group(ctx).conjugate(join_word(lhs), join_word(rhs));
    if (ctx.json_lines())
      ctx.emit({{"conjugate", result}});
    else
      ctx.out << (result ? "true" : "false") << '\n';
  });

  auto* certify = group->add_subcommand("certify", "Word-level non-innerness certificate for phi(rho)");
  certify->add_option("--perm", *perm, "Permutation in cycle notation")->required();
  certify->callback([&ctx, perm] {
    const auto path = resolve_catalog_path(ctx);
    if (path.empty()) throw ParseError("word certify needs --catalog or BIRCALC_CATALOG");
    const auto result = non_inner_certificate(IndexPermutation::parse(*perm), load_catalog_file(path));
    if (const auto* w = std::get_if<NonInnerWitness>(&result)) {
      if (ctx.json_lines()) {
        ctx.emit({{"witness", w->witness}, {"image", w->image}, {"conjugate", w->conjugate},
                  {"field_automorphism_obstruction", w->field_automorphism_obstruction}});
      } else {
        ctx.out << "witness: " << w->witness << " -> " << w->image << "\nconjugate: " << (w->conjugate ? "true" : "false")
                << "\nfield automorphism obstruction: " << (w->field_automorphism_obstruction ? "yes" : "no") << '\n';
      }
    } else {
      const auto& reason = std::get<Refusal>(result).reason;
      if (ctx.json_lines())
        ctx.emit({{"refusal", reason}});
      else
        ctx.out << "refused: " << reason << '\n';
    }
  });
}

void add_verify(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("verify", "Recompute every published value and report pass/fail");
  cmd->callback([&ctx] {
    bool all = true;
    for (const auto& check : run_verification()) {
      all = all && check.passed;
      if (ctx.json_lines()) {
        ctx.emit({{"name", check.name}, {"expected", check.expected}, {"actual", check.actual},
                  {"status", check.passed ? "pass" : "fail"}});
      } else {
        ctx.out << (check.passed ? "PASS " : "FAIL ") << check.name << "  expected: " << check.expected
                << "  actual: " << check.actual << '\n';
      }
    }
    ctx.exit_code = all ? 0 : 1;
  });
}

// Deepest subcommand that appeared on the command line, for usage messages.
const CLI::App* active_command(const CLI::App& app) {
  const CLI::App* current = &app;
  while (true) {
    const auto subs = current->get_subcommands();
    if (subs.empty()) return current;
    current = subs.front();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out};
  CLI::App app{"Exact calculator for rigid Sarkisov involutions of P^3 and cubic threefolds", "bircalc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"human", "json-lines"}));
  add_degree(app, ctx);
  add_acprofile(app, ctx);
  add_blowup(app, ctx);
  add_poly(app, ctx);
  add_catalog(app, ctx);
  add_word(app, ctx);
  add_verify(app, ctx);

  // A bare `--` separates the two words of `word conj`.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (std::find(args.begin(), args.end(), "conj") != args.end())
    std::replace(reversed.begin(), reversed.end(), std::string("--"), std::string(kSeparator));

  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << active_command(app)->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << active_command(app)->help();
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n\n" << active_command(app)->help();
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return ctx.exit_code;
}

}  // namespace bircalc::cli
