#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iterator>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "nsz/error.hpp"
#include "nsz/upoly.hpp"

namespace nsz {

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;
using Digits = boost::container::small_vector<std::uint32_t, 4>;

/// Element of a finite field realized as a tower F_p ⊂ F_p(t1) ⊂ F_p(t1, t2) ⊂ ...
///
/// Coordinates are flattened over F_p: digit i is the coefficient of
/// t1^e1 * t2^e2 * ... with i = e1 + d1 * (e2 + d2 * (...)), where dk is the
/// degree of level k. Lower levels occupy a prefix of the digit vector, so
/// embedding into an extension is zero-padding. Binary operations lift both
/// operands to the deeper of their two towers first.
class FFElement {
 public:
  FFElement() = default;
  FFElement(TowerPtr tower, Digits digits);

  const TowerPtr& tower() const noexcept { return tower_; }
  std::span<const std::uint32_t> digits() const noexcept { return {digits_.data(), digits_.size()}; }
  bool is_zero() const;
  bool is_one() const;
  /// Index of this element in the canonical enumeration of its tower.
  mpz_class index() const;

  /// The same element seen in an extension of its tower.
  FFElement lifted_to(const TowerPtr& extension) const;

  friend FFElement operator+(const FFElement& a, const FFElement& b);
  friend FFElement operator-(const FFElement& a, const FFElement& b);
  friend FFElement operator*(const FFElement& a, const FFElement& b);
  friend FFElement operator/(const FFElement& a, const FFElement& b);
  FFElement operator-() const;
  FFElement& operator+=(const FFElement& o) { return *this = *this + o; }
  FFElement& operator-=(const FFElement& o) { return *this = *this - o; }
  FFElement& operator*=(const FFElement& o) { return *this = *this * o; }

  friend bool operator==(const FFElement& a, const FFElement& b);

 private:
  TowerPtr tower_;
  Digits digits_;
};

using FFPoly = UPoly<FFElement>;

/// An immutable chain of field extensions over F_p. Extending returns a new
/// tower that shares this one as its parent; existing elements stay valid.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  /// Throws UsageError unless p is a prime below 2^31.
  static TowerPtr prime_field(std::uint32_t p);

  /// Adds a level generated by a root of `minimal_polynomial` (monic, degree
  /// >= 2, coefficients over this tower). Irreducibility is the caller's
  /// responsibility; `adjoin_root` checks it.
  TowerPtr extend(const FFPoly& minimal_polynomial) const;

  std::uint32_t characteristic() const noexcept { return p_; }
  /// Number of extension levels above F_p.
  std::size_t depth() const noexcept { return depth_; }
  /// Degree of the top level over its parent (1 for F_p).
  std::size_t degree() const noexcept { return degree_; }
  /// Degree over F_p: product of all level degrees.
  std::size_t total_degree() const noexcept { return total_; }
  const TowerPtr& parent() const noexcept { return parent_; }
  /// Minimal polynomial of the top generator over the parent level.
  const FFPoly& minimal_polynomial() const;
  /// "t<depth>"; empty for F_p.
  const std::string& generator_name() const noexcept { return name_; }
  /// Number of elements, p^total_degree.
  mpz_class order() const;

  FFElement zero() const;
  FFElement one() const;
  FFElement from_integer(long long v) const;
  FFElement from_integer(const mpz_class& v) const;
  /// The top-level generator t_depth (for F_p: the element 1).
  FFElement generator() const;
  /// Element number `index` in the canonical enumeration (base-p digits,
  /// least significant first).
  FFElement element_at(const mpz_class& index) const;
  FFElement random_element(std::mt19937_64& rng) const;

  /// The ancestor at `level` (0 = F_p). Returns this tower for level == depth().
  TowerPtr level(std::size_t level) const;

  /// True when `other` is this tower or one of its ancestors, compared
  /// structurally (same characteristic and minimal polynomials).
  bool contains(const FieldTower& other) const;
  friend bool same_field(const FieldTower& a, const FieldTower& b);

  // Digit-level kernels; spans must have length total_degree().
  void add(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::span<std::uint32_t> out) const;
  void sub(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::span<std::uint32_t> out) const;
  void mul(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::span<std::uint32_t> out) const;

 private:
  struct Private {};

 public:
  FieldTower(Private, std::uint32_t p);
  FieldTower(Private, TowerPtr parent, FFPoly minimal_polynomial);

 private:
  std::uint32_t p_;
  std::size_t depth_ = 0;
  std::size_t degree_ = 1;
  std::size_t total_ = 1;
  TowerPtr parent_;
  FFPoly minpoly_;
  // Coefficients 0..degree-1 of the monic minimal polynomial, each as parent digits.
  std::vector<std::uint32_t> min_digits_;
  std::string name_;
};

bool is_zero(const FFElement& a);
bool is_one(const FFElement& a);
FFElement zero_like(const FFElement& a);
FFElement one_like(const FFElement& a);
/// Multiplicative inverse; throws UndefinedError for zero.
FFElement inverse(const FFElement& a);
/// a^e for a nonnegative big exponent.
FFElement power(const FFElement& a, const mpz_class& e);
/// The unique p-th root (Frobenius is bijective on a finite field).
FFElement pth_root(const FFElement& a);
/// Total order by enumeration index, lifting to a common tower.
std::strong_ordering canonical_compare(const FFElement& a, const FFElement& b);

/// Rendered as a polynomial in the tower generators, e.g. `2*t1*t2 + t1 + 1`.
std::string to_string(const FFElement& a);
bool is_atomic(const FFElement& a);
inline bool is_negative(const FFElement&) { return false; }

/// The deeper of two compatible towers; throws UsageError if neither contains the other.
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

/// Elements of a tower in canonical order: 0, 1, ..., p-1, t, t+1, ...
class ElementRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FFElement;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = FFElement;

    iterator() = default;
    iterator(const FieldTower* tower, mpz_class index) : tower_(tower), index_(std::move(index)) {}
    FFElement operator*() const { return tower_->element_at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const FieldTower* tower_ = nullptr;
    mpz_class index_;
  };

  explicit ElementRange(TowerPtr tower) : tower_(std::move(tower)) {}
  iterator begin() const { return {tower_.get(), 0}; }
  iterator end() const { return {tower_.get(), tower_->order()}; }

 private:
  TowerPtr tower_;
};

inline ElementRange enumerate_elements(const TowerPtr& tower) { return ElementRange(tower); }

/// Deterministic Miller-Rabin, exact for 32-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace nsz
