#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "nsz/coeff.hpp"
#include "nsz/error.hpp"

namespace nsz {

/// Dense univariate polynomial over a field F, coefficients low to high.
/// The leading stored coefficient is never zero; the zero polynomial is empty.
///
/// UPoly<F> is itself a Euclidean domain and serves as the coefficient ring
/// K[x1] when k[x1, ..., xn] is viewed as k[x1][x2, ..., xn].
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }

  static UPoly constant(F c) { return UPoly(std::vector<F>{std::move(c)}); }
  /// The monomial c * x^k.
  static UPoly monomial(F c, std::size_t k) {
    if (nsz_zero(c)) return {};
    std::vector<F> v(k + 1, zero_like(c));
    v[k] = std::move(c);
    return UPoly(std::move(v));
  }
  /// The polynomial x, built from a sample element of F.
  static UPoly x(const F& sample) { return monomial(one_like(sample), 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  const F& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<F>& coefficients() const noexcept { return c_; }
  const F& lead() const {
    if (c_.empty()) throw UndefinedError("zero polynomial has no leading coefficient");
    return c_.back();
  }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && is_one(c_.back()); }

  UPoly monic() const {
    if (c_.empty()) return *this;
    return scaled(inverse(c_.back()));
  }

  UPoly scaled(const F& s) const {
    if (nsz_zero(s)) return {};
    std::vector<F> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(a * s);
    return UPoly(std::move(v));
  }

  UPoly shifted(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<F> v(k, zero_like(c_.front()));
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    const UPoly& big = a.size() >= b.size() ? a : b;
    const UPoly& small = a.size() >= b.size() ? b : a;
    std::vector<F> v(big.c_);
    for (std::size_t i = 0; i < small.size(); ++i) v[i] = v[i] + small.c_[i];
    return UPoly(std::move(v));
  }
  UPoly operator-() const {
    std::vector<F> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    UPoly r;
    r.c_ = std::move(v);
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.size() + b.size() - 1, zero_like(a.c_.front()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (nsz_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q * b + r with deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw UndefinedError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<F> r(a.c_);
    const F inv_lead = inverse(b.lead());
    const std::size_t db = b.size() - 1;
    std::vector<F> q(a.size() - db, zero_like(a.c_.front()));
    for (std::size_t k = a.size(); k-- > db;) {
      if (nsz_zero(r[k])) continue;
      F coef = r[k] * inv_lead;
      for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - coef * b.c_[j];
      q[k - db] = std::move(coef);
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  /// Horner evaluation; `a` may live in an extension of F.
  template <class E>
  E operator()(const E& a) const {
    E acc = zero_like(a);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> v;
    v.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * from_count(c_[i], i));
    return UPoly(std::move(v));
  }

 private:
  static bool nsz_zero(const F& a) { return detail::coeff_is_zero(a); }

  /// i * 1 in F.
  static F from_count(const F& sample, std::size_t i) {
    F one = one_like(sample);
    F acc = zero_like(sample);
    F base = one;
    // double-and-add
    while (i) {
      if (i & 1) acc = acc + base;
      i >>= 1;
      if (i) base = base + base;
    }
    return acc;
  }

  void trim() {
    while (!c_.empty() && nsz_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
bool is_zero(const UPoly<F>& p) {
  return p.is_zero();
}
template <class F>
bool is_one(const UPoly<F>& p) {
  return p.degree() == 0 && is_one(p[0]);
}
template <class F>
UPoly<F> zero_like(const UPoly<F>&) {
  return {};
}
template <class F>
UPoly<F> one_like(const UPoly<F>& p) {
  return UPoly<F>::constant(one_like(p.lead()));
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
struct ExtendedGcd {
  UPoly<F> gcd;  // monic
  UPoly<F> s;    // s * a + t * b = gcd
  UPoly<F> t;
};

/// Extended Euclid over a field. Throws UsageError when both inputs are zero.
template <class F>
ExtendedGcd<F> extended_gcd(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() && b.is_zero()) throw UsageError("extended_gcd of two zero polynomials");
  const F& sample = a.is_zero() ? b.lead() : a.lead();
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> s0 = UPoly<F>::constant(one_like(sample)), s1;
  UPoly<F> t0, t1 = UPoly<F>::constant(one_like(sample));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  F inv = inverse(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Monic lcm.
template <class F>
UPoly<F> lcm(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a / gcd(a, b) * b).monic();
}

/// True when a divides b.
template <class F>
bool divides(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero()) return b.is_zero();
  return (b % a).is_zero();
}

/// base^e mod m for a nonnegative big exponent.
template <class F>
UPoly<F> powmod(const UPoly<F>& base, const mpz_class& e, const UPoly<F>& m) {
  if (m.is_zero()) throw UndefinedError("powmod modulo zero");
  if (e < 0) throw UsageError("negative exponent");
  UPoly<F> b = base % m;
  if (m.degree() == 0) return {};
  UPoly<F> r = UPoly<F>::constant(one_like(m.lead()));
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

}  // namespace nsz
