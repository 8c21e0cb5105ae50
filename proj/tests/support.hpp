#pragma once

#include <random>
#include <string>
#include <vector>

#include "nsz/factor.hpp"
#include "nsz/ffield.hpp"
#include "nsz/format.hpp"
#include "nsz/groebner.hpp"
#include "nsz/groebner_ed.hpp"
#include "nsz/nss.hpp"
#include "nsz/parse.hpp"

namespace nsz::test {

inline TowerPtr Fp(std::uint32_t p) { return FieldTower::prime_field(p); }

inline std::vector<std::string> vars(std::size_t n) { return default_names(n); }

inline Polynomial<Rational> Q(const std::string& text, std::size_t n) { return parse_polynomial(text, vars(n)); }

inline FFPolynomial P(const std::string& text, std::size_t n, const TowerPtr& K) {
  return reduce_rational(Q(text, n), K);
}

/// Univariate polynomial written in the variable x.
inline FFPoly U(const std::string& text, const TowerPtr& K) {
  return to_univariate(reduce_rational(parse_polynomial(text, {"x"}), K), 0);
}

inline UPoly<Rational> UQ(const std::string& text) { return to_univariate(parse_polynomial(text, {"x"}), 0); }

/// F_9 = F_3[t]/(t^2 + 1).
inline TowerPtr F9() {
  auto F3 = Fp(3);
  return F3->extend(U("x^2 + 1", F3));
}

template <class F>
std::vector<std::string> str(const std::vector<Polynomial<F>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

/// Dense-ish random polynomial: up to `terms` terms of total degree <= `deg`.
inline FFPolynomial random_poly(std::mt19937_64& rng, std::size_t n, unsigned deg, unsigned terms, const TowerPtr& K) {
  std::vector<FFPolynomial::Term> ts;
  std::uniform_int_distribution<unsigned> ed(0, deg);
  for (unsigned i = 0; i < terms; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    unsigned budget = ed(rng);
    for (std::size_t v = 0; v < n && budget > 0; ++v) {
      std::uniform_int_distribution<unsigned> take(0, budget);
      e[v] = take(rng);
      budget -= e[v];
    }
    std::shuffle(e.begin(), e.end(), rng);
    ts.push_back({ExponentVector(std::move(e)), K->random_element(rng)});
  }
  return FFPolynomial::from_terms(n, std::move(ts));
}

inline FFPoly random_upoly(std::mt19937_64& rng, unsigned deg, const TowerPtr& K) {
  std::vector<FFElement> c;
  for (unsigned i = 0; i <= deg; ++i) c.push_back(K->random_element(rng));
  return FFPoly(std::move(c));
}

/// Evaluation written independently of the library: sum over terms of
/// coefficient times repeated products.
inline FFElement eval_naive(const FFPolynomial& p, const std::vector<FFElement>& x, const TowerPtr& K) {
  FFElement acc = K->zero();
  for (const auto& t : p.terms()) {
    FFElement m = t.coeff.lifted_to(K);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::uint32_t k = 0; k < t.exponents[i]; ++k) m = m * x[i];
    acc = acc + m;
  }
  return acc;
}

/// Every point of K^n, in enumeration order.
inline std::vector<std::vector<FFElement>> all_points(const TowerPtr& K, std::size_t n) {
  std::vector<FFElement> elems;
  for (auto a : enumerate_elements(K)) elems.push_back(a);
  std::vector<std::vector<FFElement>> pts{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<FFElement>> next;
    for (const auto& pt : pts)
      for (const auto& a : elems) {
        auto q = pt;
        q.push_back(a);
        next.push_back(std::move(q));
      }
    pts = std::move(next);
  }
  return pts;
}

inline bool has_zero_in(const std::vector<FFPolynomial>& gens, std::size_t n, const TowerPtr& K) {
  for (const auto& pt : all_points(K, n)) {
    bool ok = true;
    for (const auto& g : gens)
      if (!is_zero(eval_naive(g, pt, K))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

/// Textbook normal form and S-polynomial, written without the library's
/// division routine: repeatedly cancel the largest reducible term.
template <class F>
Polynomial<F> naive_normal_form(Polynomial<F> f, const std::vector<Polynomial<F>>& G, const TermOrder& order) {
  Polynomial<F> rem(f.nvars());
  while (!f.is_zero()) {
    auto lm = leading_monomial(f, order);
    bool reduced = false;
    for (const auto& g : G) {
      auto gm = leading_monomial(g, order);
      if (!gm.term.divides(lm.term)) continue;
      f = f - g.mul_term(lm.coefficient / gm.coefficient, lm.term - gm.term);
      reduced = true;
      break;
    }
    if (!reduced) {
      auto head = Polynomial<F>::monomial(lm.term, lm.coefficient);
      rem = rem + head;
      f = f - head;
    }
  }
  return rem;
}

template <class F>
bool naive_is_groebner(const std::vector<Polynomial<F>>& G, const TermOrder& order) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      auto a = leading_monomial(G[i], order), b = leading_monomial(G[j], order);
      auto T = lcm(a.term, b.term);
      auto s = G[i].mul_term(inverse(a.coefficient), T - a.term) - G[j].mul_term(inverse(b.coefficient), T - b.term);
      if (!naive_normal_form(s, G, order).is_zero()) return false;
    }
  return true;
}

}  // namespace nsz::test
