#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "nsz/groebner.hpp"
#include "nsz/upoly.hpp"

namespace nsz {

/// k[x1][x2, ..., xn]: polynomials in x2..xn whose coefficients are
/// univariate polynomials in x1.
template <class F>
using EDPolynomial = Polynomial<UPoly<F>>;

/// Regroups p in k[x1, ..., xn] as an element of k[x1][x2, ..., xn].
template <class F>
EDPolynomial<F> view_shift(const Polynomial<F>& p) {
  if (p.nvars() == 0) throw UsageError("view_shift needs at least one variable");
  std::vector<typename EDPolynomial<F>::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.exponents.without(0), UPoly<F>::monomial(t.coeff, t.exponents[0])});
  return EDPolynomial<F>::from_terms(p.nvars() - 1, std::move(terms));
}

/// Inverse of view_shift.
template <class F>
Polynomial<F> view_unshift(const EDPolynomial<F>& p) {
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& t : p.terms())
    for (std::size_t k = 0; k < t.coeff.size(); ++k)
      if (!detail::coeff_is_zero(t.coeff[k]))
        terms.push_back({t.exponents.with_inserted(0, static_cast<std::uint32_t>(k)), t.coeff[k]});
  return Polynomial<F>::from_terms(p.nvars() + 1, std::move(terms));
}

/// Scales p so that the leading coefficient (a polynomial in x1) is monic.
template <class F>
EDPolynomial<F> normalize_ed(const EDPolynomial<F>& p, const TermOrder& order) {
  if (p.is_zero()) return p;
  const auto& lc = leading_coefficient(p, order);
  return p.scaled(UPoly<F>::constant(inverse(lc.lead())));
}

/// Strong division over K[x1]. A monomial c*t of the remainder is divisible
/// by no lm(g) = c_g * t_g: whenever t_g | t, deg c < deg c_g. Coefficients
/// are reduced modulo leading coefficients by Euclidean division.
template <class F>
Division<UPoly<F>> strong_reduce(const EDPolynomial<F>& f, std::span<const EDPolynomial<F>> basis,
                                 const TermOrder& order) {
  const std::size_t n = f.nvars();
  Division<UPoly<F>> out{EDPolynomial<F>(n), std::vector<EDPolynomial<F>>(basis.size(), EDPolynomial<F>(n))};
  std::vector<Monomial<UPoly<F>>> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) throw UsageError("strong_reduce: zero basis element");
    leads.push_back(leading_monomial(g, order));
  }
  EDPolynomial<F> p = f;
  std::vector<typename EDPolynomial<F>::Term> rest;
  while (!p.is_zero()) {
    auto lm = leading_monomial(p, order);
    bool step = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!leads[i].term.divides(lm.term)) continue;
      auto q = divmod(lm.coefficient, leads[i].coefficient).first;
      if (q.is_zero()) continue;
      auto shift = lm.term - leads[i].term;
      out.cofactors[i] += EDPolynomial<F>::monomial(shift, q);
      p = p.minus_multiple(q, shift, basis[i]);
      step = true;
      break;
    }
    if (!step) {
      rest.push_back({lm.term, lm.coefficient});
      p -= EDPolynomial<F>::monomial(lm.term, lm.coefficient);
    }
  }
  out.remainder = EDPolynomial<F>::from_terms(n, std::move(rest));
  return out;
}

/// With lm(f) = a*s, lm(g) = b*t, T = lcm(s, t), l = lcm(a, b):
/// S = (l/a)(T/s) f - (l/b)(T/t) g. Its leading terms cancel.
template <class F>
EDPolynomial<F> ed_s_polynomial(const EDPolynomial<F>& f, const EDPolynomial<F>& g, const TermOrder& order) {
  auto a = leading_monomial(f, order);
  auto b = leading_monomial(g, order);
  auto T = lcm(a.term, b.term);
  auto l = lcm(a.coefficient, b.coefficient);
  return f.mul_term(l / a.coefficient, T - a.term) - g.mul_term(l / b.coefficient, T - b.term);
}

/// With u*a + v*b = gcd(a, b): G = u(T/s) f + v(T/t) g, so lm(G) = gcd(a, b) * T.
template <class F>
EDPolynomial<F> ed_g_polynomial(const EDPolynomial<F>& f, const EDPolynomial<F>& g, const TermOrder& order) {
  auto a = leading_monomial(f, order);
  auto b = leading_monomial(g, order);
  auto T = lcm(a.term, b.term);
  auto eg = extended_gcd(a.coefficient, b.coefficient);
  return f.mul_term(eg.s, T - a.term) + g.mul_term(eg.t, T - b.term);
}

/// lm(a) strongly divides lm(b): term and coefficient both divide.
template <class F>
bool strongly_divides(const Monomial<UPoly<F>>& a, const Monomial<UPoly<F>>& b) {
  return a.term.divides(b.term) && divides(a.coefficient, b.coefficient);
}

/// True when all S- and G-polynomials of pairs strong-reduce to zero.
template <class F>
bool verify_strong_groebner(std::span<const EDPolynomial<F>> basis, const TermOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!strong_reduce(ed_s_polynomial(basis[i], basis[j], order), basis, order).remainder.is_zero()) return false;
      if (!strong_reduce(ed_g_polynomial(basis[i], basis[j], order), basis, order).remainder.is_zero()) return false;
    }
  return true;
}

namespace detail {

template <class F>
void ed_interreduce(std::vector<EDPolynomial<F>>& G, const TermOrder& order) {
  std::vector<Monomial<UPoly<F>>> lms;
  for (const auto& g : G) lms.push_back(leading_monomial(g, order));
  std::vector<EDPolynomial<F>> kept;
  std::vector<Monomial<UPoly<F>>> kept_lms;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (j == i || !strongly_divides(lms[j], lms[i])) continue;
      bool equal = lms[j].term == lms[i].term && strongly_divides(lms[i], lms[j]);
      redundant = !equal || j < i;
    }
    if (!redundant) {
      kept.push_back(G[i]);
      kept_lms.push_back(lms[i]);
    }
  }
  // Tails are reduced only by elements with a unit leading coefficient, which
  // never touches leading monomials.
  std::vector<EDPolynomial<F>> unit_divisors;
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (kept_lms[i].coefficient.degree() == 0) unit_divisors.push_back(kept[i]);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    auto head = EDPolynomial<F>::monomial(kept_lms[i].term, kept_lms[i].coefficient);
    std::vector<EDPolynomial<F>> divisors;
    for (const auto& u : unit_divisors)
      if (!(u == kept[i])) divisors.push_back(u);
    auto tail = strong_reduce(kept[i] - head, std::span<const EDPolynomial<F>>(divisors), order).remainder;
    kept[i] = head + tail;
  }
  std::stable_sort(kept.begin(), kept.end(), [&](const EDPolynomial<F>& a, const EDPolynomial<F>& b) {
    return order.compare(leading_term(a, order), leading_term(b, order)) > 0;
  });
  G = std::move(kept);
}

}  // namespace detail

/// Strong Groebner basis over K[x1]. S-pairs and G-pairs are processed in
/// order of their lcm term (S before G at equal lcm, then by index); the
/// output is certified by rerunning every pair through strong_reduce.
template <class F>
StrongBasis<UPoly<F>> strong_buchberger(std::size_t nvars, std::span<const EDPolynomial<F>> gens,
                                        const TermOrder& order) {
  if (order.nvars() != nvars) throw UsageError("strong_buchberger: term order has wrong variable count");
  std::vector<EDPolynomial<F>> G;
  std::vector<Monomial<UPoly<F>>> lms;
  struct Pair {
    std::size_t i, j;
    int kind;  // 0 = S, 1 = G
    ExponentVector lcm;
  };
  std::vector<Pair> pending;

  auto add = [&](const EDPolynomial<F>& h) {
    auto g = normalize_ed(h, order);
    const std::size_t k = G.size();
    lms.push_back(leading_monomial(g, order));
    G.push_back(std::move(g));
    for (std::size_t i = 0; i < k; ++i) {
      auto T = lcm(lms[i].term, lms[k].term);
      const auto& a = lms[i].coefficient;
      const auto& b = lms[k].coefficient;
      bool units = a.degree() == 0 && b.degree() == 0;
      // Product criterion, valid when both leading coefficients are units.
      if (!(units && lms[i].term.coprime(lms[k].term))) pending.push_back({i, k, 0, T});
      // A G-polynomial adds nothing when one coefficient divides the other.
      if (!divides(a, b) && !divides(b, a)) pending.push_back({i, k, 1, T});
    }
  };

  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw UsageError("strong_buchberger: generator has wrong variable count");
    if (!g.is_zero()) add(g);
  }

  for (;;) {
    while (!pending.empty()) {
      auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
        auto c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.kind, a.i, a.j) < std::tie(b.kind, b.i, b.j);
      });
      Pair pr = *best;
      pending.erase(best);
      auto h = pr.kind == 0 ? ed_s_polynomial(G[pr.i], G[pr.j], order) : ed_g_polynomial(G[pr.i], G[pr.j], order);
      auto r = strong_reduce(h, std::span<const EDPolynomial<F>>(G), order).remainder;
      if (!r.is_zero()) add(r);
    }
    // Post-hoc certification; anything left over re-enters the queue.
    bool clean = true;
    const std::size_t m = G.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (int kind = 0; kind < 2; ++kind) {
          auto h = kind == 0 ? ed_s_polynomial(G[i], G[j], order) : ed_g_polynomial(G[i], G[j], order);
          auto r = strong_reduce(h, std::span<const EDPolynomial<F>>(G), order).remainder;
          if (!r.is_zero()) {
            add(r);
            clean = false;
          }
        }
    if (clean) break;
  }

  detail::ed_interreduce(G, order);
  if (!verify_strong_groebner(std::span<const EDPolynomial<F>>(G), order))
    throw InvariantViolation("strong_buchberger output failed certification");
  return {std::move(G), order, true};
}

/// q = product of the leading coefficients of the basis, made monic.
template <class F>
UPoly<F> specialization_locus(const StrongBasis<UPoly<F>>& basis) {
  if (!basis.certified) throw PreconditionError("specialization_locus needs a certified basis");
  if (basis.elements.empty()) throw PreconditionError("specialization_locus of an empty basis");
  UPoly<F> q = leading_coefficient(basis.elements.front(), basis.order);
  for (std::size_t i = 1; i < basis.elements.size(); ++i) q = q * leading_coefficient(basis.elements[i], basis.order);
  return q.monic();
}

/// ev_a applied elementwise. When no leading coefficient vanishes at a, the
/// image is a Groebner basis of ev_a(I) with the same leading terms, so the
/// result is certified without another Buchberger run.
template <class F>
StrongBasis<F> specialize_basis(const StrongBasis<UPoly<F>>& basis, const F& a) {
  if (!basis.certified) throw PreconditionError("specialize_basis needs a certified basis");
  for (const auto& g : basis.elements)
    if (detail::coeff_is_zero(leading_coefficient(g, basis.order)(a)))
      throw PreconditionError("specialize_basis: the point is a root of the specialization locus");
  StrongBasis<F> out;
  out.order = basis.order;
  for (const auto& g : basis.elements)
    out.elements.push_back(map_coefficients(g, [&](const UPoly<F>& c) { return c(a); }));
  out.certified = true;
  return out;
}

}  // namespace nsz
