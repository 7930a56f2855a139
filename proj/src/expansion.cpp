#include "steinhaus/expansion.hpp"

#include <map>
#include <utility>

#include "steinhaus/errors.hpp"
#include "steinhaus/integer_math.hpp"

namespace steinhaus {

namespace {

/// True when x = p/q (lowest terms) terminates in base b, i.e. q divides some
/// power of b.
bool has_finite_expansion(const Rational& x, Base base) {
  Integer q = x.denominator();
  Integer b(base.value());
  for (;;) {
    Integer g = gcd(q, b);
    if (g == 1) break;
    while (mpz_divisible_p(q.get_mpz_t(), g.get_mpz_t())) q /= g;
  }
  return q == 1;
}

/// Digits of x in [0,1) by exact long division, stopping at remainder 0.
/// Requires a terminating expansion; the last digit emitted is nonzero
/// (a zero digit cannot immediately precede remainder 0).
std::vector<digit_t> terminating_digits(const Rational& x, Base base) {
  std::vector<digit_t> digits;
  Integer rem = x.numerator();
  const Integer den = x.denominator();
  const Integer b(base.value());
  while (rem != 0) {
    rem *= b;
    Integer d = rem / den;
    digits.push_back(static_cast<digit_t>(d.get_ui()));
    rem -= d * den;
  }
  return digits;
}

}  // namespace

FiniteExpansion FiniteExpansion::from_word(DigitWord digits) {
  Base base = digits.base();
  return FiniteExpansion(base, std::move(digits), false);
}

FiniteExpansion FiniteExpansion::one(Base base) {
  return FiniteExpansion(base, DigitWord::empty(base), true);
}

FiniteExpansion FiniteExpansion::from_rational(const Rational& x, Base base) {
  if (x.is_negative() || x > Rational(1)) {
    fail(ErrorKind::OutOfRange, "finite expansion requires x in [0,1], got " + x.str());
  }
  if (x == Rational(1)) return one(base);
  if (!has_finite_expansion(x, base)) {
    fail(ErrorKind::NotFiniteExpansion,
         x.str() + " has no terminating base-" + std::to_string(base.value()) + " expansion");
  }
  return from_word(DigitWord(base, terminating_digits(x, base)));
}

const DigitWord& FiniteExpansion::digits() const {
  if (is_one_) fail(ErrorKind::InvalidArgument, "the endpoint 1 has no finite digit word");
  return digits_;
}

Rational FiniteExpansion::value() const {
  if (is_one_) return 1;
  return psi_value(digits_);
}

std::vector<digit_t> FiniteExpansion::padded_digits(std::size_t n) const {
  const DigitWord& w = digits();  // rejects ONE
  if (n < w.size()) fail(ErrorKind::InvalidArgument, "padding below current depth");
  std::vector<digit_t> out = w.digits();
  out.resize(n, 0);
  return out;
}

Rational psi_value(const DigitWord& prefix) {
  Integer num = 0;
  const Integer b(prefix.base().value());
  for (digit_t d : prefix) {
    num *= b;
    num += d;
  }
  return Rational(num, ipow(b, prefix.size()));
}

std::optional<TailKind> ExpansionRep::tail_kind() const {
  if (period.size() != 1) return std::nullopt;
  if (period[0] == 0) return TailKind::Zeros;
  if (period[0] == period.base().max_digit()) return TailKind::Nines;
  return std::nullopt;
}

Rational ExpansionRep::value() const {
  // preperiod + b^-|pre| * P / (b^|per| - 1), P the period's positional value.
  const Base base = preperiod.base();
  const Integer b(base.value());
  Integer period_value = 0;
  for (digit_t d : period) {
    period_value *= b;
    period_value += d;
  }
  Rational tail(period_value, ipow(b, period.size()) - 1);
  return psi_value(preperiod) + tail / Rational(ipow(b, preperiod.size()));
}

std::vector<ExpansionRep> dual_representations(const Rational& x, Base base) {
  if (x.is_negative() || x > Rational(1)) {
    fail(ErrorKind::OutOfRange, "dual_representations requires x in [0,1], got " + x.str());
  }
  const DigitWord zero_period(base, {0});
  const DigitWord nine_period(base, {base.max_digit()});
  if (x.is_zero()) return {{DigitWord::empty(base), zero_period}};
  if (x == Rational(1)) return {{DigitWord::empty(base), nine_period}};

  if (has_finite_expansion(x, base)) {
    std::vector<digit_t> digits = terminating_digits(x, base);
    std::vector<digit_t> decremented = digits;
    decremented.back() -= 1;  // last digit is nonzero
    return {{DigitWord(base, std::move(digits)), zero_period},
            {DigitWord(base, std::move(decremented)), nine_period}};
  }

  // Long division with remainder tracking: the first repeated remainder
  // closes the period.
  std::vector<digit_t> digits;
  std::map<Integer, std::size_t> seen;  // remainder -> index of digit it produces
  Integer rem = x.numerator();
  const Integer den = x.denominator();
  const Integer b(base.value());
  for (;;) {
    auto [it, inserted] = seen.emplace(rem, digits.size());
    if (!inserted) {
      std::size_t start = it->second;
      std::vector<digit_t> pre(digits.begin(), digits.begin() + static_cast<long>(start));
      std::vector<digit_t> per(digits.begin() + static_cast<long>(start), digits.end());
      return {{DigitWord(base, std::move(pre)), DigitWord(base, std::move(per))}};
    }
    rem *= b;
    Integer d = rem / den;
    digits.push_back(static_cast<digit_t>(d.get_ui()));
    rem -= d * den;
  }
}

}  // namespace steinhaus
