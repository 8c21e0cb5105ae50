#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsz/coeff.hpp"
#include "nsz/error.hpp"
#include "nsz/exponents.hpp"

namespace nsz {

/// Nonzero coefficient times a term.
template <class C>
struct Monomial {
  C coefficient;
  ExponentVector term;
};

/// Sparse multivariate polynomial over a coefficient domain C.
///
/// C must provide the ring operators, `==`, and ADL-visible `is_zero`,
/// `zero_like` and `one_like`. The support is kept in strictly descending
/// canonical (x1 > x2 > ...) lex order with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal.
template <class C>
class Polynomial {
 public:
  using coefficient_type = C;
  struct Term {
    ExponentVector exponents;
    C coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, C c) { return monomial(ExponentVector(nvars), std::move(c)); }

  static Polynomial monomial(ExponentVector e, C c) {
    Polynomial r(e.size());
    if (!nsz_is_zero(c)) r.terms_.push_back({std::move(e), std::move(c)});
    return r;
  }

  static Polynomial variable(std::size_t nvars, std::size_t var, C one) {
    if (var >= nvars) throw UsageError("variable index out of range");
    return monomial(ExponentVector::unit(nvars, var), std::move(one));
  }

  /// Sorts, merges equal terms and drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
    Polynomial r(nvars);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return canonical_compare(a.exponents, b.exponents) > 0;
    });
    for (auto& t : terms) {
      if (t.exponents.size() != nvars) throw UsageError("term has wrong variable count");
      if (!r.terms_.empty() && r.terms_.back().exponents == t.exponents) {
        r.terms_.back().coeff = r.terms_.back().coeff + t.coeff;
      } else {
        r.drop_trailing_zero();
        r.terms_.push_back(std::move(t));
      }
    }
    r.drop_trailing_zero();
    return r;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Coefficient of x^e, or nullopt when e is outside the support.
  std::optional<C> coefficient(const ExponentVector& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExponentVector& key) {
      return canonical_compare(t.exponents, key) > 0;
    });
    if (it != terms_.end() && it->exponents == e) return it->coeff;
    return std::nullopt;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents.is_one()); }

  /// True when only variable `var` occurs (constants included).
  bool only_involves(std::size_t var) const {
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < nvars_; ++i)
        if (i != var && t.exponents[i] != 0) return false;
    return true;
  }

  bool involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exponents[var] != 0; });
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exponents.total_degree());
    return d;
  }

  /// Degree in variable `var`.
  std::uint32_t degree(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exponents[var]);
    return d;
  }

  /// Any coefficient of the support; used to manufacture 0 and 1 of C.
  const C& sample_coefficient() const {
    if (terms_.empty()) throw UsageError("zero polynomial has no coefficients");
    return terms_.front().coeff;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
    if (a.size() == 1) return b.mul_term(a.terms_[0].coeff, a.terms_[0].exponents);
    if (b.size() == 1) return a.mul_term(b.terms_[0].coeff, b.terms_[0].exponents);
    std::map<ExponentVector, C, DescendingCanonical> acc;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto e = s.exponents + t.exponents;
        auto prod = s.coeff * t.coeff;
        auto [it, fresh] = acc.try_emplace(std::move(e), prod);
        if (!fresh) it->second = it->second + prod;
      }
    Polynomial r(a.nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
      if (!nsz_is_zero(c)) r.terms_.push_back({e, std::move(c)});
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// c * x^e * this. Term multiplication preserves every term order, so the
  /// result stays sorted.
  Polynomial mul_term(const C& c, const ExponentVector& e) const {
    if (e.size() != nvars_) throw UsageError("term has wrong variable count");
    Polynomial r(nvars_);
    if (nsz_is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto prod = t.coeff * c;
      if (!nsz_is_zero(prod)) r.terms_.push_back({t.exponents + e, std::move(prod)});
    }
    return r;
  }

  Polynomial scaled(const C& c) const { return mul_term(c, ExponentVector(nvars_)); }

  /// this - c * x^e * g in one merge pass.
  Polynomial minus_multiple(const C& c, const ExponentVector& e, const Polynomial& g) const {
    return *this - g.mul_term(c, e);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  struct DescendingCanonical {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const { return canonical_compare(a, b) > 0; }
  };

  static bool nsz_is_zero(const C& c) { return detail::coeff_is_zero(c); }

  void drop_trailing_zero() {
    if (!terms_.empty() && nsz_is_zero(terms_.back().coeff)) terms_.pop_back();
  }

  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw UsageError("polynomials over different variable counts");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_compatible(b);
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      std::strong_ordering cmp = std::strong_ordering::greater;
      if (i == a.terms_.end())
        cmp = std::strong_ordering::less;
      else if (j != b.terms_.end())
        cmp = canonical_compare(i->exponents, j->exponents);
      if (cmp > 0) {
        r.terms_.push_back(*i++);
      } else if (cmp < 0) {
        r.terms_.push_back({j->exponents, subtract ? -j->coeff : j->coeff});
        ++j;
      } else {
        C c = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
        if (!nsz_is_zero(c)) r.terms_.push_back({i->exponents, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Leading term (exponent vector) of p under `order`.
template <class C>
const ExponentVector& leading_term(const Polynomial<C>& p, const TermOrder& order) {
  if (p.is_zero()) throw UndefinedError("the zero polynomial has no leading term");
  auto terms = p.terms();
  if (order.is_canonical()) return terms.front().exponents;
  const auto* best = &terms.front();
  for (const auto& t : terms.subspan(1))
    if (order.compare(t.exponents, best->exponents) > 0) best = &t;
  return best->exponents;
}

template <class C>
Monomial<C> leading_monomial(const Polynomial<C>& p, const TermOrder& order) {
  const auto& lt = leading_term(p, order);
  return {*p.coefficient(lt), lt};
}

template <class C>
C leading_coefficient(const Polynomial<C>& p, const TermOrder& order) {
  return leading_monomial(p, order).coefficient;
}

/// Applies `fn` to every coefficient, producing a polynomial over another domain.
template <class C, class Fn>
auto map_coefficients(const Polynomial<C>& p, Fn&& fn) {
  using D = std::decay_t<decltype(fn(std::declval<const C&>()))>;
  std::vector<typename Polynomial<D>::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.exponents, fn(t.coeff)});
  return Polynomial<D>::from_terms(p.nvars(), std::move(out));
}

/// Rewrites the variable set: term e becomes `fn(e)` in a ring of `nvars` variables.
template <class C, class Fn>
Polynomial<C> map_terms(const Polynomial<C>& p, std::size_t nvars, Fn&& fn) {
  std::vector<typename Polynomial<C>::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({fn(t.exponents), t.coeff});
  return Polynomial<C>::from_terms(nvars, std::move(out));
}

/// Embeds p into a ring with one extra variable inserted at position `var`.
template <class C>
Polynomial<C> insert_variable(const Polynomial<C>& p, std::size_t var) {
  return map_terms(p, p.nvars() + 1, [&](const ExponentVector& e) { return e.with_inserted(var); });
}

/// Drops variable `var`, which must not occur in p.
template <class C>
Polynomial<C> remove_variable(const Polynomial<C>& p, std::size_t var) {
  if (p.involves(var)) throw UsageError("cannot drop a variable that occurs");
  return map_terms(p, p.nvars() - 1, [&](const ExponentVector& e) { return e.without(var); });
}

template <class C>
C power(C base, std::uint64_t k) {
  C r = one_like(base);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

template <class C>
Polynomial<C> power(const Polynomial<C>& p, std::uint64_t k) {
  if (k == 0) {
    if (p.is_zero()) throw UndefinedError("0^0");
    return Polynomial<C>::constant(p.nvars(), one_like(p.sample_coefficient()));
  }
  Polynomial<C> r = p;
  for (std::uint64_t i = 1; i < k; ++i) r = r * p;
  return r;
}

/// The evaluation homomorphism x1 -> a: f(x1, x2, ..., xn) -> f(a, x2, ..., xn).
/// `a` may live in an extension of the coefficient field; coefficients are
/// lifted by the coefficient arithmetic.
template <class C>
Polynomial<C> evaluate_x1(const Polynomial<C>& p, const C& a) {
  if (p.nvars() == 0) throw UsageError("evaluate_x1 needs at least one variable");
  std::vector<typename Polynomial<C>::Term> out;
  out.reserve(p.size());
  std::vector<C> powers{one_like(a)};
  for (const auto& t : p.terms()) {
    auto k = t.exponents[0];
    while (powers.size() <= k) powers.push_back(powers.back() * a);
    out.push_back({t.exponents.without(0), t.coeff * powers[k]});
  }
  return Polynomial<C>::from_terms(p.nvars() - 1, std::move(out));
}

/// Full evaluation at a point; `zero` fixes the result domain when p = 0.
template <class C>
C evaluate(const Polynomial<C>& p, std::span<const C> point, const C& zero) {
  if (point.size() != p.nvars()) throw UsageError("point has wrong dimension");
  C acc = zero;
  for (const auto& t : p.terms()) {
    C m = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.exponents[i]) m = m * power(point[i], t.exponents[i]);
    acc = acc + m;
  }
  return acc;
}

}  // namespace nsz
