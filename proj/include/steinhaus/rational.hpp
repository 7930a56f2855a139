#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace steinhaus {

/// Arbitrary-precision integer. GMP's mpz_class with value semantics.
using Integer = mpz_class;

/// Exact rational number: always in lowest terms, denominator > 0.
///
/// Every measure, probability, frequency and deviation in this library is a
/// Rational; nothing in the measure pipeline ever touches floating point.
/// decimal() exists only for display and is explicitly a truncation.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit from integer literals is intended
  explicit Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  /// Strict parse of "n/d" or "n" (optional leading sign). Decimal literals,
  /// whitespace, exponents and a zero denominator are ParseError.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_negative() const { return sgn(q_) < 0; }
  bool is_positive() const { return sgn(q_) > 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Canonical text form: "n/d", or just "n" when the denominator is 1.
  std::string str() const { return q_.get_str(); }

  /// Base-10 positional approximation with `digits` places, truncated toward
  /// zero. Display only; never feeds back into any computation.
  std::string decimal(unsigned digits) const;

  Rational abs() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // o must be nonzero

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  bool operator==(const Rational& o) const { return mpq_equal(q_.get_mpq_t(), o.q_.get_mpq_t()) != 0; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return q_; }

private:
  struct canonical_tag {};
  Rational(mpq_class q, canonical_tag) : q_(std::move(q)) {}

  mpq_class q_;  // invariant: canonical (lowest terms, den > 0)
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace steinhaus
