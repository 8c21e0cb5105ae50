#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "nsz/error.hpp"

namespace nsz {

/// Exponents of x1..xn in a term x1^k1 * ... * xn^kn. The length is fixed at
/// construction; the zero vector is the term 1.
class ExponentVector {
 public:
  using value_type = std::uint32_t;
  using Storage = boost::container::small_vector<value_type, 8>;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : e_(nvars, 0) {}
  ExponentVector(std::initializer_list<value_type> e) : e_(e) {}
  explicit ExponentVector(const std::vector<value_type>& e) : e_(e.begin(), e.end()) {}

  static ExponentVector unit(std::size_t nvars, std::size_t var, value_type power = 1) {
    ExponentVector r(nvars);
    r.e_[var] = power;
    return r;
  }

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }
  const Storage& raw() const noexcept { return e_; }

  std::uint64_t total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
  }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](value_type k) { return k == 0; });
  }

  /// True when this term divides `other`.
  bool divides(const ExponentVector& other) const {
    check_same(other);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  /// True when the two terms share no variable.
  bool coprime(const ExponentVector& other) const {
    check_same(other);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    return true;
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }

  /// Quotient term a / b; b must divide a.
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
    if (!b.divides(a)) throw UsageError("exponent quotient: divisor does not divide");
    ExponentVector r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }

  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    a.check_same(b);
    ExponentVector r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  /// Drops variable `var`.
  ExponentVector without(std::size_t var) const {
    ExponentVector r;
    r.e_.reserve(e_.size() - 1);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (i != var) r.e_.push_back(e_[i]);
    return r;
  }

  /// Inserts a new variable with exponent `power` at position `var`.
  ExponentVector with_inserted(std::size_t var, value_type power = 0) const {
    ExponentVector r(*this);
    r.e_.insert(r.e_.begin() + static_cast<std::ptrdiff_t>(var), power);
    return r;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  void check_same(const ExponentVector& o) const {
    if (o.e_.size() != e_.size()) throw UsageError("exponent vectors of different length");
  }

  Storage e_;
};

/// Lexicographic comparison with x1 > x2 > ... ; this fixes the storage order
/// of polynomial supports.
inline std::strong_ordering canonical_compare(const ExponentVector& a, const ExponentVector& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

/// A term order: lex or weighted-lex over a variable priority list.
///
/// `priority` lists variable indices from most to least significant. For
/// weighted-lex the weighted degree decides first and the lex order over
/// `priority` breaks ties, so non-injective weights still give a total order.
class TermOrder {
 public:
  enum class Kind { Lex, WeightedLex };

  static TermOrder lex(std::size_t nvars) {
    std::vector<std::size_t> p(nvars);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return TermOrder(Kind::Lex, {}, std::move(p));
  }
  static TermOrder lex(std::vector<std::size_t> priority) {
    return TermOrder(Kind::Lex, {}, std::move(priority));
  }
  static TermOrder weighted_lex(std::vector<std::uint64_t> weights) {
    std::vector<std::size_t> p(weights.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
    return weighted_lex(std::move(weights), std::move(p));
  }
  static TermOrder weighted_lex(std::vector<std::uint64_t> weights, std::vector<std::size_t> priority) {
    if (weights.size() != priority.size()) throw UsageError("weight count differs from variable count");
    for (auto w : weights)
      if (w == 0) throw UsageError("term-order weights must be positive");
    return TermOrder(Kind::WeightedLex, std::move(weights), std::move(priority));
  }

  /// Lex with x1 least significant: x2 > x3 > ... > xn > x1. Its Groebner
  /// bases contain a generator of the elimination ideal I ∩ K[x1].
  static TermOrder x1_last_lex(std::size_t nvars) {
    std::vector<std::size_t> p;
    for (std::size_t i = 1; i < nvars; ++i) p.push_back(i);
    if (nvars > 0) p.push_back(0);
    return lex(std::move(p));
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return priority_.size(); }
  const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }

  /// Lex with x1 > x2 > ... > xn, i.e. the storage order.
  bool is_canonical() const noexcept { return canonical_; }

  std::strong_ordering compare(const ExponentVector& s, const ExponentVector& t) const {
    if (s.size() != t.size() || s.size() != priority_.size())
      throw UsageError("term order applied to exponent vector of wrong length");
    if (canonical_) return canonical_compare(s, t);
    if (kind_ == Kind::WeightedLex) {
      std::uint64_t ws = 0, wt = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        ws += weights_[i] * s[i];
        wt += weights_[i] * t[i];
      }
      if (ws != wt) return ws <=> wt;
    }
    for (auto v : priority_)
      if (s[v] != t[v]) return s[v] <=> t[v];
    return std::strong_ordering::equal;
  }

  bool less(const ExponentVector& s, const ExponentVector& t) const { return compare(s, t) < 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind k, std::vector<std::uint64_t> w, std::vector<std::size_t> p)
      : kind_(k), weights_(std::move(w)), priority_(std::move(p)) {
    std::vector<std::size_t> sorted(priority_);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw UsageError("variable priority is not a permutation");
    canonical_ = kind_ == Kind::Lex;
    for (std::size_t i = 0; canonical_ && i < priority_.size(); ++i) canonical_ = priority_[i] == i;
  }

  Kind kind_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::size_t> priority_;
  bool canonical_ = false;
};

}  // namespace nsz
