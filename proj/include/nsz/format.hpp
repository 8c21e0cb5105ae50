#pragma once

#include <span>
#include <string>
#include <vector>

#include "nsz/polynomial.hpp"
#include "nsz/upoly.hpp"

namespace nsz {

/// x1, x2, ..., xn.
inline std::vector<std::string> default_names(std::size_t nvars, const std::string& stem = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

namespace detail {

template <class C>
void append_monomial(std::string& out, const C& c, const std::string& term, bool first) {
  const bool neg = is_negative(c);
  const C mag = neg ? -c : c;
  std::string body;
  if (term.empty())
    body = to_string(mag);
  else if (is_one(mag))
    body = term;
  else if (is_atomic(mag))
    body = to_string(mag) + "*" + term;
  else
    body = "(" + to_string(mag) + ")*" + term;
  if (first)
    out += (neg ? "-" : "") + body;
  else
    out += (neg ? " - " : " + ") + body;
}

inline std::string term_string(const ExponentVector& e, std::span<const std::string> names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace detail

/// Canonical text form, e.g. `3*x1^2*x2 - x3 + 1`, monomials in descending
/// order under `order` (storage lex when omitted).
template <class C>
std::string to_string(const Polynomial<C>& p, std::span<const std::string> names, const TermOrder* order = nullptr) {
  if (names.size() != p.nvars()) throw UsageError("wrong number of variable names");
  if (p.is_zero()) return "0";
  std::vector<const typename Polynomial<C>::Term*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  if (order && !order->is_canonical())
    std::stable_sort(terms.begin(), terms.end(),
                     [&](auto* a, auto* b) { return order->compare(a->exponents, b->exponents) > 0; });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i)
    detail::append_monomial(out, terms[i]->coeff, detail::term_string(terms[i]->exponents, names), i == 0);
  return out;
}

template <class C>
std::string to_string(const Polynomial<C>& p) {
  auto names = default_names(p.nvars());
  return to_string(p, std::span<const std::string>(names));
}

/// Univariate polynomial in variable `var`, highest degree first.
template <class F>
std::string to_string(const UPoly<F>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (detail::coeff_is_zero(p[k])) continue;
    std::string term;
    if (k >= 1) term = var;
    if (k > 1) term += "^" + std::to_string(k);
    detail::append_monomial(out, p[k], term, first);
    first = false;
  }
  return out;
}

}  // namespace nsz
