#pragma once

#include <gmpxx.h>

#include <string>

#include "nsz/error.hpp"

namespace nsz {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpz_class v) : v_(std::move(v)) {}
  Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw UndefinedError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& value() const noexcept { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw UndefinedError("division by zero rational");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& r) { return sgn(r.value()) == 0; }
inline bool is_one(const Rational& r) { return r.value() == 1; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational inverse(const Rational& r) { return Rational(1) / r; }
inline bool is_negative(const Rational& r) { return sgn(r.value()) < 0; }

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return r.numerator().get_str();
  return r.numerator().get_str() + "/" + r.denominator().get_str();
}
/// A coefficient prints without parentheses in a product.
inline bool is_atomic(const Rational&) { return true; }

}  // namespace nsz
