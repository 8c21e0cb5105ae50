#include <sstream>

#include "nsz/format.hpp"
#include "nsz/nss.hpp"

namespace nsz {

FFPolynomial lift(const FFPolynomial& p, const TowerPtr& tower) {
  return map_coefficients(p, [&](const FFElement& c) { return c.lifted_to(tower); });
}

namespace {

std::vector<FFPolynomial> lift_all(const std::vector<FFPolynomial>& gens, const TowerPtr& tower) {
  std::vector<FFPolynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(lift(g, tower));
  return out;
}

std::vector<FFPolynomial> specialize_x1(const std::vector<FFPolynomial>& gens, const FFElement& a) {
  std::vector<FFPolynomial> out;
  for (const auto& g : gens) {
    auto h = evaluate_x1(g, a);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  return out;
}

struct State {
  TowerPtr tower;
  std::vector<FFElement> coords;
  std::vector<BranchStep> trace;
  std::uint64_t seed;
};

void recurse(std::vector<FFPolynomial> gens, std::size_t nvars, std::size_t offset, State& st) {
  if (nvars == 0) {
    for (const auto& g : gens)
      if (!g.is_zero()) throw InvariantViolation("solver reached a nonzero constant");
    return;
  }
  std::erase_if(gens, [](const FFPolynomial& g) { return g.is_zero(); });
  const auto zero_poly = FFPoly();

  if (gens.empty()) {
    // Everything vanishes: fix the remaining variables to 0.
    for (std::size_t i = 0; i < nvars; ++i) {
      auto a = st.tower->zero();
      st.coords.push_back(a);
      st.trace.push_back({offset + i, nvars - i == 1 ? Branch::Base : Branch::Locus, zero_poly, a, std::nullopt,
                          nvars - i == 1 ? std::nullopt : std::optional<FFPoly>(FFPoly::constant(st.tower->one()))});
    }
    return;
  }

  if (nvars == 1) {
    FFPoly p;
    for (const auto& g : gens) p = gcd(p, to_univariate(g, 0));
    if (p.degree() == 0) throw InvariantViolation("solver base case: generators have no common root");
    BranchStep step{offset, Branch::Base, p, st.tower->zero(), std::nullopt, std::nullopt};
    if (p.degree() > 0) {
      auto factors = factor_univariate(p, st.tower, st.seed);
      auto adj = adjoin_root(st.tower, factors.front().factor);
      if (adj.tower != st.tower) step.extension = adj.tower;
      st.tower = adj.tower;
      step.point = adj.root;
    }
    st.coords.push_back(step.point);
    st.trace.push_back(std::move(step));
    return;
  }

  FFIdeal I(nvars, gens);
  auto p = eliminate_to_x1(I);
  if (p.degree() == 0) throw InvariantViolation("elimination ideal contains a unit in a nontrivial ideal");

  if (p.degree() > 0) {
    auto choice = find_branch_root(p, I, st.tower, st.seed);
    BranchStep step{offset, Branch::Eliminant, p, choice.root, std::nullopt, std::nullopt};
    if (choice.tower != st.tower) step.extension = choice.tower;
    st.tower = choice.tower;
    st.coords.push_back(choice.root);
    st.trace.push_back(std::move(step));
    recurse(specialize_x1(lift_all(gens, st.tower), choice.root), nvars - 1, offset + 1, st);
    return;
  }

  // I ∩ K[x1] = 0: specialize a strong basis over K[x1] away from its locus.
  std::vector<EDPolynomial<FFElement>> shifted;
  for (const auto& g : gens) shifted.push_back(view_shift(g));
  const auto order = TermOrder::lex(nvars - 1);
  auto gamma = strong_buchberger(nvars - 1, std::span<const EDPolynomial<FFElement>>(shifted), order);
  for (const auto& g : gamma.elements)
    if (g.is_constant()) throw InvariantViolation("strong basis meets K[x1] although I ∩ K[x1] = 0");
  auto q = specialization_locus(gamma);
  auto choice = good_specialization_point(q, st.tower);
  BranchStep step{offset, Branch::Locus, zero_poly, choice.root, std::nullopt, q};
  if (choice.tower != st.tower) step.extension = choice.tower;
  st.tower = choice.tower;
  auto special = specialize_basis(gamma, choice.root);
  for (const auto& g : special.elements)
    if (g.is_constant()) throw InvariantViolation("specialized basis contains a constant");
  st.coords.push_back(choice.root);
  st.trace.push_back(std::move(step));
  recurse(lift_all(special.elements, st.tower), nvars - 1, offset + 1, st);
}

}  // namespace

RootChoice find_branch_root(const FFPoly& p, const FFIdeal& I, const TowerPtr& tower, std::uint64_t seed) {
  if (p.degree() < 1) throw UsageError("find_branch_root needs a nonconstant eliminant");
  if (is_trivial(I, false).trivial) throw UsageError("find_branch_root called on the unit ideal");
  for (const auto& f : factor_univariate(p, tower, seed)) {
    auto adj = adjoin_root(tower, f.factor);
    auto image = specialize_x1(lift_all(I.generators, adj.tower), adj.root);
    if (!is_trivial(FFIdeal(I.nvars - 1, std::move(image)), false).trivial) return {adj.root, adj.tower};
  }
  throw InvariantViolation("no root of the eliminant gives a nontrivial specialization");
}

RootChoice good_specialization_point(const FFPoly& q, const TowerPtr& tower) {
  if (q.is_zero()) throw UsageError("good_specialization_point of the zero polynomial");
  TowerPtr t = tower;
  while (t->order() <= q.degree()) t = t->extend(first_irreducible_quadratic(t));
  for (auto a : enumerate_elements(t))
    if (!is_zero(q(a))) return {a, t};
  throw InvariantViolation("a polynomial vanished on more points than its degree");
}

SolveOutcome solve(const FFIdeal& I, const TowerPtr& base, const SolverConfig& config) {
  SolveOutcome out;
  auto gens = lift_all(I.generators, base);
  auto triv = is_trivial(FFIdeal(I.nvars, gens), true);
  if (triv.trivial) {
    out.kind = SolveOutcome::Kind::Trivial;
    out.certificate = std::move(triv.certificate);
    auto sum = combination(std::span<const FFPolynomial>(out.certificate), std::span<const FFPolynomial>(gens), I.nvars);
    if (!(sum == FFPolynomial::constant(I.nvars, base->one())))
      throw InvariantViolation("triviality certificate does not sum to 1");
    out.verified = true;
    return out;
  }
  State st{base, {}, {}, config.seed};
  recurse(gens, I.nvars, 0, st);
  if (st.coords.size() != I.nvars || st.trace.size() != I.nvars)
    throw InvariantViolation("solver produced a point of the wrong dimension");
  out.kind = SolveOutcome::Kind::Point;
  out.tower = st.tower;
  for (auto& c : st.coords) out.coordinates.push_back(c.lifted_to(st.tower));
  out.trace = std::move(st.trace);
  for (const auto& g : gens)
    if (!is_zero(evaluate(lift(g, st.tower), std::span<const FFElement>(out.coordinates), st.tower->zero())))
      throw InvariantViolation("solver point does not annihilate a generator");
  out.verified = true;
  return out;
}

std::vector<std::string> describe_tower(const TowerPtr& tower) {
  std::vector<std::string> lines;
  for (std::size_t k = 1; k <= tower->depth(); ++k) {
    auto level = tower->level(k);
    lines.push_back("ext " + level->generator_name() + ": " +
                    to_string(level->minimal_polynomial(), level->generator_name()));
  }
  return lines;
}

std::string format_outcome(const SolveOutcome& outcome, const std::vector<std::string>& names, bool with_trace) {
  std::ostringstream os;
  if (outcome.kind == SolveOutcome::Kind::Trivial) {
    os << "TRIVIAL\n";
    for (std::size_t i = 0; i < outcome.certificate.size(); ++i)
      os << "cert[" << i + 1 << "] = " << to_string(outcome.certificate[i], std::span<const std::string>(names)) << "\n";
    return os.str();
  }
  os << "POINT\n";
  for (const auto& line : describe_tower(outcome.tower)) os << line << "\n";
  for (std::size_t i = 0; i < outcome.coordinates.size(); ++i)
    os << names[i] << " = " << to_string(outcome.coordinates[i]) << "\n";
  if (outcome.verified) os << "VERIFIED\n";
  if (with_trace) {
    for (const auto& s : outcome.trace) {
      const auto& var = names[s.variable];
      os << "trace " << var << ": ";
      switch (s.branch) {
        case Branch::Eliminant: os << "eliminant " << to_string(s.eliminated, var); break;
        case Branch::Locus: os << "locus " << to_string(*s.locus, var); break;
        case Branch::Base: os << "base " << to_string(s.eliminated, var); break;
      }
      os << "; " << var << " = " << to_string(s.point);
      if (s.extension) os << "; adjoined " << (*s.extension)->generator_name();
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace nsz
