#include "nsz/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nsz/format.hpp"
#include "nsz/groebner.hpp"
#include "nsz/groebner_ed.hpp"
#include "nsz/nss.hpp"
#include "nsz/parse.hpp"

namespace nsz {

namespace {

struct Options {
  std::string command;
  std::vector<std::string> files;
  std::string order = "lex";
  std::string query;
  std::uint64_t seed = 0;
  bool trace = false;
};

ProblemFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_problem(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), std::string(e.what()).substr(std::string(e.what()).find(": ") + 2) + " in " + path);
  }
}

TermOrder parse_order(const std::string& spec, std::size_t nvars) {
  if (spec == "lex") return TermOrder::lex(nvars);
  if (spec.rfind("wlex:", 0) == 0) {
    std::vector<std::uint64_t> w;
    std::stringstream ss(spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("bad weight '" + item + "' in --order");
      w.push_back(std::stoull(item));
    }
    if (w.size() != nvars) throw UsageError("--order wlex needs exactly one weight per variable");
    return TermOrder::weighted_lex(std::move(w));
  }
  throw UsageError("unknown term order '" + spec + "' (expected lex or wlex:<w1,..,wn>)");
}

/// Converts parsed Q-coefficients into the target field.
struct RationalField {
  using Element = Rational;
  Rational operator()(const Rational& r) const { return r; }
};

struct PrimeField {
  using Element = FFElement;
  TowerPtr tower;
  FFElement operator()(const Rational& r) const { return reduce_rational(r, tower); }
};

template <class Conv>
auto convert(const Polynomial<Rational>& p, const Conv& conv) {
  return map_coefficients(p, [&](const Rational& r) { return conv(r); });
}

template <class Conv>
Ideal<typename Conv::Element> ideal_of(const ProblemFile& pf, const Conv& conv) {
  std::vector<Polynomial<typename Conv::Element>> gens;
  for (const auto& g : pf.generators) gens.push_back(convert(g, conv));
  return Ideal<typename Conv::Element>(pf.vars.size(), std::move(gens));
}

template <class Conv>
int dispatch(const Options& opt, const std::vector<ProblemFile>& problems, const Conv& conv, std::ostream& out) {
  using F = typename Conv::Element;
  const auto& pf = problems.front();
  const auto& names = pf.vars;
  const std::span<const std::string> nm(names);
  const std::size_t n = names.size();
  auto I = ideal_of(pf, conv);

  auto query = [&]() {
    if (!opt.query.empty()) return convert(parse_polynomial(opt.query, names), conv);
    if (!pf.query) throw UsageError("this command needs a query polynomial (a 'query' line or --query)");
    return convert(*pf.query, conv);
  };

  if (opt.command == "gb") {
    auto order = parse_order(opt.order, n);
    for (const auto& g : buchberger(I, order).elements) out << to_string(g, nm, &order) << "\n";
    return kExitOk;
  }
  if (opt.command == "gb-strong") {
    if (n == 0) throw UsageError("gb-strong needs at least one variable");
    std::vector<EDPolynomial<F>> shifted;
    for (const auto& g : I.generators) shifted.push_back(view_shift(g));
    auto basis = strong_buchberger(n - 1, std::span<const EDPolynomial<F>>(shifted), TermOrder::lex(n - 1));
    const auto shown = TermOrder::x1_last_lex(n);
    for (const auto& g : basis.elements) out << to_string(view_unshift(g), nm, &shown) << "\n";
    if (!basis.elements.empty()) out << "locus = " << to_string(specialization_locus(basis), names[0]) << "\n";
    return kExitOk;
  }
  if (opt.command == "eliminate") {
    if (n == 0) throw UsageError("eliminate needs at least one variable");
    out << to_string(eliminate_to_x1(I), names[0]) << "\n";
    return kExitOk;
  }
  if (opt.command == "is-trivial") {
    auto t = is_trivial(I, true);
    if (!t.trivial) {
      out << "NONTRIVIAL\n";
      return kExitNegative;
    }
    out << "TRIVIAL\n";
    for (std::size_t i = 0; i < t.certificate.size(); ++i)
      out << "cert[" << i + 1 << "] = " << to_string(t.certificate[i], nm) << "\n";
    return kExitOk;
  }
  if (opt.command == "member") {
    bool yes = member(query(), I);
    out << (yes ? "MEMBER" : "NOT MEMBER") << "\n";
    return yes ? kExitOk : kExitNegative;
  }
  if (opt.command == "radical-member") {
    auto r = radical_member(query(), I);
    if (!r.member) {
      out << "NOT RADICAL MEMBER\n";
      return kExitNegative;
    }
    out << "RADICAL MEMBER\n";
    if (r.witness_exponent) out << "witness exponent = " << *r.witness_exponent << "\n";
    return kExitOk;
  }
  if (opt.command == "intersect") {
    const auto& other = problems.at(1);
    if (!(other.field == pf.field) || other.vars != pf.vars)
      throw UsageError("intersect needs two files over the same field and variables");
    auto J = ideal_of(other, conv);
    for (const auto& g : ideal_intersect(I, J).generators) out << to_string(g, nm) << "\n";
    return kExitOk;
  }
  if constexpr (std::is_same_v<F, FFElement>) {
    if (opt.command == "solve") {
      auto outcome = solve(I, conv.tower, SolverConfig{opt.seed});
      out << format_outcome(outcome, names, opt.trace);
      return kExitOk;
    }
  } else {
    if (opt.command == "solve")
      throw UsageError("solve works over finite fields only (field p <prime>); the algebraic closure of Q is out of scope");
  }
  throw UsageError("unknown command '" + opt.command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases, elimination and constructive Nullstellensatz solving", "nsz"};
  app.require_subcommand(1, 1);
  Options opt;

  auto single = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.files, "problem file")->required()->expected(1);
    return sub;
  };
  auto* gb = single("gb", "reduced Groebner basis over the coefficient field");
  gb->add_option("--order", opt.order, "lex or wlex:<w1,..,wn>");
  single("gb-strong", "strong Groebner basis with K[x1] coefficients");
  single("eliminate", "monic generator of I ∩ K[x1]");
  single("is-trivial", "decide whether the ideal is the unit ideal");
  single("member", "ideal membership of the query polynomial")->add_option("--query", opt.query, "query polynomial");
  single("radical-member", "radical membership of the query polynomial")
      ->add_option("--query", opt.query, "query polynomial");
  auto* inter = app.add_subcommand("intersect", "intersection of two ideals");
  inter->add_option("files", opt.files, "two problem files")->required()->expected(2);
  auto* sol = single("solve", "common zero over the algebraic closure of F_p, or a unit certificate");
  sol->add_option("--seed", opt.seed, "seed for the factorization randomness");
  sol->add_flag("--trace", opt.trace, "print one line per recursion level");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    std::vector<ProblemFile> problems;
    for (const auto& f : opt.files) problems.push_back(load(f));
    const auto& field = problems.front().field;
    if (field.kind == FieldSpec::Kind::Rationals) return dispatch(opt, problems, RationalField{}, out);
    return dispatch(opt, problems, PrimeField{FieldTower::prime_field(field.prime)}, out);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace nsz
