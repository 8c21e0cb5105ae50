#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "nsz/polynomial.hpp"
#include "nsz/upoly.hpp"

namespace nsz {

/// A finite subset of I \ {0} together with the order it was computed under.
/// `certified` is set only after every S-polynomial of a pair was checked to
/// reduce to zero (or, for specialized bases, by the morphism argument).
template <class C>
struct StrongBasis {
  std::vector<Polynomial<C>> elements;
  TermOrder order = TermOrder::lex(0);
  bool certified = false;
};

template <class C>
struct Ideal {
  Ideal(std::size_t n, std::vector<Polynomial<C>> gens) : nvars(n), generators(std::move(gens)) {
    for (const auto& g : generators)
      if (g.nvars() != nvars) throw UsageError("ideal generators over different variable counts");
  }

  std::size_t nvars;
  std::vector<Polynomial<C>> generators;
  std::optional<StrongBasis<C>> basis;
};

/// f = sum cofactors[i] * basis[i] + remainder.
template <class C>
struct Division {
  Polynomial<C> remainder;
  std::vector<Polynomial<C>> cofactors;
};

/// Full multivariate division over a field. No term of the remainder is
/// divisible by a leading term of the basis, and each cofactor * basis
/// element has leading term at most lt(f).
template <class F>
Division<F> reduce(const Polynomial<F>& f, std::span<const Polynomial<F>> basis, const TermOrder& order) {
  const std::size_t n = f.nvars();
  Division<F> out{Polynomial<F>(n), std::vector<Polynomial<F>>(basis.size(), Polynomial<F>(n))};
  std::vector<Monomial<F>> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) throw UsageError("reduce: zero basis element");
    leads.push_back(leading_monomial(g, order));
  }
  Polynomial<F> p = f;
  std::vector<typename Polynomial<F>::Term> rest;
  while (!p.is_zero()) {
    auto lm = leading_monomial(p, order);
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!leads[i].term.divides(lm.term)) continue;
      auto shift = lm.term - leads[i].term;
      auto coef = lm.coefficient / leads[i].coefficient;
      out.cofactors[i] += Polynomial<F>::monomial(shift, coef);
      p = p.minus_multiple(coef, shift, basis[i]);
      divided = true;
      break;
    }
    if (!divided) {
      rest.push_back({lm.term, lm.coefficient});
      p -= Polynomial<F>::monomial(lm.term, lm.coefficient);
    }
  }
  out.remainder = Polynomial<F>::from_terms(n, std::move(rest));
  return out;
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> basis, const TermOrder& order) {
  return reduce(f, basis, order).remainder;
}

/// S(f, g) = (T / lm(f)) f - (T / lm(g)) g with T = lcm(lt f, lt g).
template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, const TermOrder& order) {
  auto a = leading_monomial(f, order);
  auto b = leading_monomial(g, order);
  auto t = lcm(a.term, b.term);
  auto one = one_like(a.coefficient);
  return f.mul_term(one / a.coefficient, t - a.term) - g.mul_term(one / b.coefficient, t - b.term);
}

/// Independent check that every pair's S-polynomial reduces to zero.
template <class F>
bool verify_groebner(std::span<const Polynomial<F>> basis, const TermOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
  return true;
}

namespace detail {

template <class F>
struct TrackedPoly {
  Polynomial<F> poly;
  std::vector<Polynomial<F>> rep;  // poly = sum rep[k] * gens[k]; empty when untracked
};

template <class F>
struct BuchbergerRun {
  std::vector<TrackedPoly<F>> basis;
  std::optional<std::size_t> unit;  // index of a nonzero constant, if one was found
};

template <class F>
std::vector<Polynomial<F>> combine(const std::vector<Polynomial<F>>& a, const Polynomial<F>& ca,
                                   const std::vector<Polynomial<F>>& b, const Polynomial<F>& cb) {
  std::vector<Polynomial<F>> r;
  r.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r.push_back(a[k] * ca + b[k] * cb);
  return r;
}

/// Buchberger with normal pair selection and Buchberger's two criteria.
/// With `track`, every basis element carries its representation in the
/// generators; with `stop_on_unit`, the run ends at the first nonzero constant.
template <class F>
BuchbergerRun<F> buchberger_core(std::size_t nvars, std::span<const Polynomial<F>> gens, const TermOrder& order,
                                 bool track, bool stop_on_unit) {
  BuchbergerRun<F> run;
  auto& G = run.basis;
  std::vector<ExponentVector> lts;
  std::vector<Polynomial<F>> polys;  // G[k].poly, kept as a divisor list

  struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
  };
  std::vector<Pair> pending;
  std::vector<std::vector<bool>> done;  // done[j][i], i < j

  auto is_pending = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return !done[j][i];
  };

  auto add = [&](TrackedPoly<F> t) -> bool {
    const std::size_t k = G.size();
    lts.push_back(leading_term(t.poly, order));
    polys.push_back(t.poly);
    G.push_back(std::move(t));
    done.emplace_back(k, false);
    for (std::size_t i = 0; i < k; ++i) pending.push_back({i, k, lcm(lts[i], lts[k])});
    if (G.back().poly.is_constant()) {
      run.unit = k;
      return stop_on_unit;
    }
    return false;
  };

  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].is_zero()) continue;
    TrackedPoly<F> t{gens[k], {}};
    if (track) {
      t.rep.assign(gens.size(), Polynomial<F>(nvars));
      t.rep[k] = Polynomial<F>::constant(nvars, one_like(gens[k].sample_coefficient()));
    }
    if (add(std::move(t))) return run;
  }

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      auto c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pair pr = *best;
    pending.erase(best);
    done[pr.j][pr.i] = true;

    if (lts[pr.i].coprime(lts[pr.j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (lts[k].divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
    }
    if (chain) continue;

    const auto& f = G[pr.i];
    const auto& g = G[pr.j];
    auto a = leading_monomial(f.poly, order);
    auto b = leading_monomial(g.poly, order);
    auto one = one_like(a.coefficient);
    auto mf = Polynomial<F>::monomial(pr.lcm - a.term, one / a.coefficient);
    auto mg = Polynomial<F>::monomial(pr.lcm - b.term, -(one / b.coefficient));
    auto s = f.poly * mf + g.poly * mg;

    auto div = reduce(s, std::span<const Polynomial<F>>(polys), order);
    if (div.remainder.is_zero()) continue;

    TrackedPoly<F> h{std::move(div.remainder), {}};
    if (track) {
      h.rep = combine(f.rep, mf, g.rep, mg);
      for (std::size_t k = 0; k < G.size(); ++k)
        if (!div.cofactors[k].is_zero())
          for (std::size_t m = 0; m < h.rep.size(); ++m) h.rep[m] -= div.cofactors[k] * G[k].rep[m];
    }
    if (add(std::move(h))) return run;
  }
  return run;
}

}  // namespace detail

/// Reduced Groebner basis: minimal, inter-reduced, monic, sorted by leading
/// term descending.
template <class F>
std::vector<Polynomial<F>> reduce_basis(std::vector<Polynomial<F>> basis, const TermOrder& order) {
  std::vector<Polynomial<F>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& lt_i = leading_term(basis[i], order);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i) continue;
      const auto& lt_j = leading_term(basis[j], order);
      if (lt_j.divides(lt_i) && (lt_j != lt_i || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    auto r = normal_form(minimal[i], std::span<const Polynomial<F>>(others), order);
    minimal[i] = r.scaled(inverse(leading_coefficient(r, order)));
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return order.compare(leading_term(a, order), leading_term(b, order)) > 0;
  });
  return minimal;
}

/// Reduced Groebner basis of <gens>, certified by rerunning the S-polynomial
/// check on the output. Throws InvariantViolation if that check fails.
template <class F>
StrongBasis<F> buchberger(std::size_t nvars, std::span<const Polynomial<F>> gens, const TermOrder& order) {
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw UsageError("buchberger: generator has wrong variable count");
  if (order.nvars() != nvars) throw UsageError("buchberger: term order has wrong variable count");
  auto run = detail::buchberger_core(nvars, gens, order, false, true);
  StrongBasis<F> out;
  out.order = order;
  if (run.unit) {
    out.elements.push_back(Polynomial<F>::constant(nvars, one_like(run.basis[*run.unit].poly.sample_coefficient())));
  } else {
    std::vector<Polynomial<F>> polys;
    for (auto& t : run.basis) polys.push_back(std::move(t.poly));
    out.elements = reduce_basis(std::move(polys), order);
  }
  if (!verify_groebner(std::span<const Polynomial<F>>(out.elements), order))
    throw InvariantViolation("buchberger produced a set that fails the S-polynomial check");
  out.certified = true;
  return out;
}

template <class F>
StrongBasis<F> buchberger(const Ideal<F>& I, const TermOrder& order) {
  return buchberger(I.nvars, std::span<const Polynomial<F>>(I.generators), order);
}

/// The ideal with its reduced basis under `order` cached.
template <class F>
Ideal<F> with_basis(Ideal<F> I, const TermOrder& order) {
  if (!I.basis || !(I.basis->order == order)) I.basis = buchberger(I, order);
  return I;
}

template <class F>
struct Triviality {
  bool trivial = false;
  /// When trivial: 1 = sum certificate[i] * generators[i].
  std::vector<Polynomial<F>> certificate;
};

/// I is the whole ring iff its basis contains a nonzero constant.
template <class F>
Triviality<F> is_trivial(const Ideal<F>& I, bool want_certificate = true) {
  const auto order = TermOrder::lex(I.nvars);
  auto run = detail::buchberger_core(I.nvars, std::span<const Polynomial<F>>(I.generators), order,
                                     want_certificate, true);
  Triviality<F> out;
  if (!run.unit) return out;
  out.trivial = true;
  if (want_certificate) {
    const auto& u = run.basis[*run.unit];
    auto inv = inverse(u.poly.sample_coefficient());
    for (const auto& r : u.rep) out.certificate.push_back(r.scaled(inv));
  }
  return out;
}

/// Sum certificate[i] * generators[i].
template <class F>
Polynomial<F> combination(std::span<const Polynomial<F>> coefficients, std::span<const Polynomial<F>> generators,
                          std::size_t nvars) {
  if (coefficients.size() != generators.size()) throw UsageError("certificate length differs from generator count");
  Polynomial<F> acc(nvars);
  for (std::size_t i = 0; i < generators.size(); ++i) acc += coefficients[i] * generators[i];
  return acc;
}

template <class F>
bool member(const Polynomial<F>& f, const Ideal<F>& I) {
  if (f.is_zero()) return true;
  const auto& basis = I.basis ? *I.basis : buchberger(I, TermOrder::lex(I.nvars));
  return normal_form(f, std::span<const Polynomial<F>>(basis.elements), basis.order).is_zero();
}

/// Polynomial in variable `var` only, as a dense univariate polynomial.
template <class F>
UPoly<F> to_univariate(const Polynomial<F>& p, std::size_t var) {
  if (!p.only_involves(var)) throw UsageError("polynomial is not univariate in the requested variable");
  if (p.is_zero()) return {};
  std::vector<F> c(p.degree(var) + 1, zero_like(p.sample_coefficient()));
  for (const auto& t : p.terms()) c[t.exponents[var]] = t.coeff;
  return UPoly<F>(std::move(c));
}

template <class F>
Polynomial<F> from_univariate(const UPoly<F>& u, std::size_t nvars, std::size_t var) {
  std::vector<typename Polynomial<F>::Term> terms;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (!detail::coeff_is_zero(u[k])) terms.push_back({ExponentVector::unit(nvars, var, static_cast<std::uint32_t>(k)), u[k]});
  return Polynomial<F>::from_terms(nvars, std::move(terms));
}

/// Monic generator of I ∩ K[x1] (zero when the intersection is {0}), read
/// off a lex basis with x1 least significant.
template <class F>
UPoly<F> eliminate_to_x1(const Ideal<F>& I) {
  if (I.nvars == 0) throw UsageError("eliminate_to_x1 needs at least one variable");
  auto basis = buchberger(I, TermOrder::x1_last_lex(I.nvars));
  UPoly<F> p;
  for (const auto& g : basis.elements)
    if (g.only_involves(0)) p = gcd(p, to_univariate(g, 0));
  return p;
}

}  // namespace nsz
