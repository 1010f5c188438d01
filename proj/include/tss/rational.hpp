#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace tss {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Wraps a GMP rational so that modular periods, regularized
/// volumes and flow angles compare exactly: equality of periods must be
/// decidable, which rules floating point out.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long num) : value_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);

  /// Parses "p/q" or "p" with an optional leading minus.
  /// Throws ParseError on anything else (including "p/0").
  static Rational parse(std::string_view text);

  /// "p/q", or just "p" when the denominator is 1. parse(str()) round-trips.
  std::string str() const;

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational operator-() const { return Rational(-value_); }
  Rational operator+(const Rational& o) const { return Rational(value_ + o.value_); }
  Rational operator-(const Rational& o) const { return Rational(value_ - o.value_); }
  Rational operator*(const Rational& o) const { return Rational(value_ * o.value_); }
  /// Throws DomainError on division by zero.
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  bool operator!=(const Rational& o) const { return value_ != o.value_; }
  bool operator<(const Rational& o) const { return value_ < o.value_; }
  bool operator<=(const Rational& o) const { return value_ <= o.value_; }
  bool operator>(const Rational& o) const { return value_ > o.value_; }
  bool operator>=(const Rational& o) const { return value_ >= o.value_; }

  /// Representative of *this modulo `period` in [0, period).
  /// Requires period > 0; throws DomainError otherwise.
  Rational mod(const Rational& period) const;

  double to_double() const { return value_.get_d(); }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tss
