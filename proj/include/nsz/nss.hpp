#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsz/factor.hpp"
#include "nsz/ffield.hpp"
#include "nsz/groebner.hpp"
#include "nsz/groebner_ed.hpp"

namespace nsz {

// ---------------------------------------------------------------------------
// Ideal intersection and the coprime splitting identity

namespace detail {

/// z*p with z a new variable in front (index 0).
template <class F>
Polynomial<F> times_slack(const Polynomial<F>& p) {
  if (p.is_zero()) return Polynomial<F>(p.nvars() + 1);
  return insert_variable(p, 0).mul_term(one_like(p.sample_coefficient()), ExponentVector::unit(p.nvars() + 1, 0));
}

/// (1 - z)*p.
template <class F>
Polynomial<F> times_one_minus_slack(const Polynomial<F>& p) {
  return insert_variable(p, 0) - times_slack(p);
}

}  // namespace detail

/// I ∩ J = <z*I, (1 - z)*J> ∩ k[x1, ..., xn], eliminating the slack variable
/// z with a lex order in which z comes first.
template <class F>
Ideal<F> ideal_intersect(const Ideal<F>& I, const Ideal<F>& J) {
  if (I.nvars != J.nvars) throw UsageError("intersecting ideals of different rings");
  const std::size_t n = I.nvars;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.generators) gens.push_back(detail::times_slack(f));
  for (const auto& g : J.generators) gens.push_back(detail::times_one_minus_slack(g));
  auto basis = buchberger(n + 1, std::span<const Polynomial<F>>(gens), TermOrder::lex(n + 1));
  std::vector<Polynomial<F>> out;
  for (const auto& g : basis.elements)
    if (!g.involves(0)) out.push_back(remove_variable(g, 0));
  return Ideal<F>(n, std::move(out));
}

/// Both inclusions by generator membership.
template <class F>
bool same_ideal(const Ideal<F>& I, const Ideal<F>& J) {
  auto Ib = with_basis(I, TermOrder::lex(I.nvars));
  auto Jb = with_basis(J, TermOrder::lex(J.nvars));
  for (const auto& g : I.generators)
    if (!member(g, Jb)) return false;
  for (const auto& g : J.generators)
    if (!member(g, Ib)) return false;
  return true;
}

template <class F>
struct CoprimeSplitReport {
  UPoly<F> q1, q2;  // q1*f1 + q2*f2 = 1
  bool product_in_both = false;            // <f1 f2, G> ⊆ <f1, G> ∩ <f2, G>
  bool intersection_in_product = false;    // <f1, G> ∩ <f2, G> ⊆ <f1 f2, G>
  bool identity_z_f1 = false;              // z f1 = [f1 f2] Q2 - [Q2 f2 - z] f1
  bool identity_one_minus_z_f2 = false;    // (1 - z) f2 = [f1 f2] Q1 + [Q2 f2 - z] f2
  bool identity_f1_f2 = false;             // f1 f2 = [z f1] f2 + [(1 - z) f2] f1
  bool identity_q2_f2_minus_z = false;     // Q2 f2 - z = [(1 - z) f2] Q2 - [z f1] Q1
  bool slack_split = false;                // g = z g - (z - 1) g for every g in G
  bool slack_elimination = false;          // <f1 f2, Q2 f2 - z, G> ∩ k[x] = <f1 f2, G>

  bool all() const {
    return product_in_both && intersection_in_product && identity_z_f1 && identity_one_minus_z_f2 &&
           identity_f1_f2 && identity_q2_f2_minus_z && slack_split && slack_elimination;
  }
};

/// Checks <f1 f2, G> = <f1, G> ∩ <f2, G> for coprime f1, f2 in K[x1] and
/// every intermediate identity of the slack-variable argument, exactly.
/// Throws PreconditionError unless gcd(f1, f2) = 1.
template <class F>
CoprimeSplitReport<F> coprime_split_identity(const UPoly<F>& f1, const UPoly<F>& f2,
                                             const std::vector<Polynomial<F>>& G, std::size_t nvars) {
  if (nvars == 0) throw UsageError("coprime_split_identity needs at least one variable");
  if (f1.is_zero() || f2.is_zero()) throw PreconditionError("coprime_split_identity: zero factor");
  auto eg = extended_gcd(f1, f2);
  if (eg.gcd.degree() != 0) throw PreconditionError("coprime_split_identity: factors are not coprime");
  CoprimeSplitReport<F> rep;
  rep.q1 = eg.s;
  rep.q2 = eg.t;

  const std::size_t n = nvars;
  auto P = [&](const UPoly<F>& u) { return from_univariate(u, n, 0); };
  const auto F1 = P(f1), F2 = P(f2), F12 = P(f1 * f2);

  std::vector<Polynomial<F>> gens12{F12}, gens1{F1}, gens2{F2};
  for (const auto& g : G) {
    gens12.push_back(g);
    gens1.push_back(g);
    gens2.push_back(g);
  }
  Ideal<F> I12(n, gens12), I1(n, gens1), I2(n, gens2);
  auto I1b = with_basis(I1, TermOrder::lex(n));
  auto I2b = with_basis(I2, TermOrder::lex(n));
  auto I12b = with_basis(I12, TermOrder::lex(n));

  rep.product_in_both = true;
  for (const auto& g : gens12)
    if (!member(g, I1b) || !member(g, I2b)) rep.product_in_both = false;
  auto meet = ideal_intersect(I1, I2);
  rep.intersection_in_product = true;
  for (const auto& g : meet.generators)
    if (!member(g, I12b)) rep.intersection_in_product = false;

  // The identities live in k[z, x1, ..., xn], z at index 0.
  const std::size_t m = n + 1;
  const auto one = one_like(f1.lead());
  auto Z = Polynomial<F>::variable(m, 0, one);
  auto One = Polynomial<F>::constant(m, one);
  auto lift = [&](const UPoly<F>& u) { return from_univariate(u, m, 1); };
  const auto f1z = lift(f1), f2z = lift(f2), f12z = lift(f1 * f2), Q1 = lift(eg.s), Q2 = lift(eg.t);
  const auto bridge = Q2 * f2z - Z;  // Q2 f2 - z
  rep.identity_z_f1 = Z * f1z == f12z * Q2 - bridge * f1z;
  rep.identity_one_minus_z_f2 = (One - Z) * f2z == f12z * Q1 + bridge * f2z;
  rep.identity_f1_f2 = f12z == (Z * f1z) * f2z + ((One - Z) * f2z) * f1z;
  rep.identity_q2_f2_minus_z = bridge == ((One - Z) * f2z) * Q2 - (Z * f1z) * Q1;

  rep.slack_split = true;
  std::vector<Polynomial<F>> bridged{f12z, bridge};
  for (const auto& g : G) {
    auto gz = insert_variable(g, 0);
    if (!(gz == Z * gz - (Z - One) * gz)) rep.slack_split = false;
    bridged.push_back(gz);
  }
  auto basis = buchberger(m, std::span<const Polynomial<F>>(bridged), TermOrder::lex(m));
  std::vector<Polynomial<F>> eliminated;
  for (const auto& g : basis.elements)
    if (!g.involves(0)) eliminated.push_back(remove_variable(g, 0));
  rep.slack_elimination = same_ideal(Ideal<F>(n, std::move(eliminated)), I12);
  return rep;
}

// ---------------------------------------------------------------------------
// Radical membership

struct RadicalMembership {
  bool member = false;
  /// Smallest k <= 10 with f^k in I, when one exists.
  std::optional<unsigned> witness_exponent;
};

/// f ∈ √I iff <I, 1 - y f> is the unit ideal, y a fresh last variable.
template <class F>
RadicalMembership radical_member(const Polynomial<F>& f, const Ideal<F>& I, bool search_witness = true) {
  if (f.nvars() != I.nvars) throw UsageError("radical_member: polynomial and ideal over different rings");
  RadicalMembership out;
  if (f.is_zero()) {
    out.member = true;
    out.witness_exponent = 1;
    return out;
  }
  const std::size_t n = I.nvars;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators) gens.push_back(insert_variable(g, n));
  const auto one = one_like(f.sample_coefficient());
  auto Y = Polynomial<F>::variable(n + 1, n, one);
  gens.push_back(Polynomial<F>::constant(n + 1, one) - Y * insert_variable(f, n));
  out.member = is_trivial(Ideal<F>(n + 1, std::move(gens)), false).trivial;
  if (out.member && search_witness) {
    auto Ib = with_basis(I, TermOrder::lex(n));
    Polynomial<F> fk = f;
    for (unsigned k = 1; k <= 10; ++k) {
      if (member(fk, Ib)) {
        out.witness_exponent = k;
        break;
      }
      fk = fk * f;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The solver over towers of F_p

using FFPolynomial = Polynomial<FFElement>;
using FFIdeal = Ideal<FFElement>;

/// Lifts every coefficient into `tower`.
FFPolynomial lift(const FFPolynomial& p, const TowerPtr& tower);

struct RootChoice {
  FFElement root;
  TowerPtr tower;  // equal to the input tower unless an extension was needed
};

/// A root a of p (p generating I ∩ K[x1]) with ev_a(I) nontrivial. Irreducible
/// factors are tried in canonical order, one root each. Throws UsageError if
/// I is trivial or p is constant, and InvariantViolation if no factor works.
RootChoice find_branch_root(const FFPoly& p, const FFIdeal& I, const TowerPtr& tower, std::uint64_t seed = 0);

/// The first a in enumeration order with q(a) != 0, first adjoining
/// quadratic extensions while the field has at most deg q elements.
/// Throws UsageError when q = 0.
RootChoice good_specialization_point(const FFPoly& q, const TowerPtr& tower);

enum class Branch { Eliminant, Locus, Base };

/// One recursion level of the solver.
struct BranchStep {
  std::size_t variable;          // original index of the variable fixed here
  Branch branch;
  FFPoly eliminated;             // generator of I ∩ K[x] at this level (0 if none)
  FFElement point;
  std::optional<TowerPtr> extension;  // set when this level grew the tower
  std::optional<FFPoly> locus;        // Locus only
};

struct SolveOutcome {
  enum class Kind { Trivial, Point };
  Kind kind = Kind::Point;
  std::vector<FFPolynomial> certificate;  // Trivial: 1 = sum certificate[i] * generators[i]
  TowerPtr tower;                         // Point: field containing all coordinates
  std::vector<FFElement> coordinates;
  bool verified = false;
  std::vector<BranchStep> trace;
};

struct SolverConfig {
  std::uint64_t seed = 0;  // equal-degree splitting randomness
};

/// A certified common zero of I in the algebraic closure of F_p, or a
/// certificate that I is the unit ideal. Every Point is checked by
/// evaluating all generators; a failure throws InvariantViolation.
SolveOutcome solve(const FFIdeal& I, const TowerPtr& base, const SolverConfig& config = {});

/// `TRIVIAL` + `cert[i] = ...` lines, or `POINT`, `ext` lines, `x<i> = ...`
/// lines and `VERIFIED`. With `with_trace`, one `trace` line per level follows.
std::string format_outcome(const SolveOutcome& outcome, const std::vector<std::string>& names, bool with_trace);

/// `ext t<k>: <minimal polynomial>` for every level of the tower.
std::vector<std::string> describe_tower(const TowerPtr& tower);

}  // namespace nsz
