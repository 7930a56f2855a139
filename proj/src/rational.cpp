#include "steinhaus/rational.hpp"

#include <cctype>
#include <ostream>

#include "steinhaus/errors.hpp"

namespace steinhaus {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    if (s.find('.') != std::string_view::npos) {
      fail(ErrorKind::ParseError,
           "decimal literals are not accepted, use n/d: '" + std::string(whole) + "'");
    }
    fail(ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
  }
  Integer value(std::string(body), 10);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text), canonical_tag{});
  }
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  Integer den(std::string(den_text), 10);
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q), canonical_tag{});
}

std::string Rational::decimal(unsigned digits) const {
  Integer num = numerator();
  Integer den = denominator();
  std::string out;
  if (sgn(num) < 0) {
    out = "-";
    num = -num;
  }
  out += Integer(num / den).get_str();
  if (digits == 0) return out;
  out += '.';
  Integer rem = num % den;
  for (unsigned i = 0; i < digits; ++i) {
    rem *= 10;
    out += Integer(rem / den).get_str();
    rem %= den;
  }
  return out;
}

Rational Rational::abs() const { return is_negative() ? -*this : *this; }

Rational Rational::operator-() const { return Rational(mpq_class(-q_), canonical_tag{}); }
Rational Rational::operator+(const Rational& o) const {
  return Rational(mpq_class(q_ + o.q_), canonical_tag{});
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(mpq_class(q_ - o.q_), canonical_tag{});
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(mpq_class(q_ * o.q_), canonical_tag{});
}
Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero");
  return Rational(mpq_class(q_ / o.q_), canonical_tag{});
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace steinhaus
