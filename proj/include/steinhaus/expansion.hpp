#pragma once

#include <optional>
#include <vector>

#include "steinhaus/alphabet.hpp"

namespace steinhaus {

/// The two constant tails a finite expansion can carry: all zeros, or all
/// (b-1)s ("nines" in base 10).
enum class TailKind { Zeros, Nines };

/// A number in [0,1] given by finitely many base-b digits. Values in [0,1)
/// are digit words (value = sum a_j b^-j); the value 1 has no finite digit
/// word and is carried by a dedicated ONE marker, so endpoints cover [0,1].
class FiniteExpansion {
public:
  static FiniteExpansion from_word(DigitWord digits);
  static FiniteExpansion zero(Base base) { return from_word(DigitWord::empty(base)); }
  static FiniteExpansion one(Base base);

  /// Exact conversion; OutOfRange if x is outside [0,1], NotFiniteExpansion
  /// if x has no terminating base-b expansion (use the enclosure API then).
  static FiniteExpansion from_rational(const Rational& x, Base base);

  Base base() const noexcept { return base_; }
  bool is_one() const noexcept { return is_one_; }

  /// Digit word; only meaningful when !is_one() (InvalidArgument otherwise).
  const DigitWord& digits() const;

  std::size_t depth() const noexcept { return is_one_ ? 0 : digits_.size(); }

  Rational value() const;

  /// Digits padded with zeros to length n (requires n >= depth, !is_one).
  std::vector<digit_t> padded_digits(std::size_t n) const;

  bool operator==(const FiniteExpansion& o) const { return value() == o.value(); }
  std::strong_ordering operator<=>(const FiniteExpansion& o) const {
    return value() <=> o.value();
  }

private:
  FiniteExpansion(Base base, DigitWord digits, bool is_one)
      : base_(base), digits_(std::move(digits)), is_one_(is_one) {}

  Base base_;
  DigitWord digits_;
  bool is_one_;
};

/// Positional value of a digit word: sum of a_j b^-j over the word, an exact
/// rational in [0,1). The empty word evaluates to 0.
Rational psi_value(const DigitWord& prefix);

/// An infinite digit sequence that is eventually periodic: the preperiod
/// digits followed by the period block repeated forever. Finite expansions
/// appear as period {0} (zeros tail) or period {b-1} (nines tail).
struct ExpansionRep {
  DigitWord preperiod;
  DigitWord period;  // never empty

  /// Zeros/Nines when the period is the single digit 0 / b-1.
  std::optional<TailKind> tail_kind() const;

  /// Exact value of the represented number.
  Rational value() const;

  bool operator==(const ExpansionRep&) const = default;
};

/// Enumerates the digit sequences evaluating to x (the preimage of x under
/// the positional map). A rational with a terminating expansion and 0 < x < 1
/// has exactly two: the zeros-tail form and the nines-tail form with the last
/// nonzero digit decremented. x = 0 has only the zeros form, x = 1 only the
/// nines form. Any other rational in [0,1] has one eventually-periodic
/// representation, returned as (preperiod, period).
std::vector<ExpansionRep> dual_representations(const Rational& x, Base base);

}  // namespace steinhaus
