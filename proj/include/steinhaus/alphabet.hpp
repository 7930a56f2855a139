#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steinhaus/rational.hpp"

namespace steinhaus {

using digit_t = std::uint32_t;

/// Number of digits in the alphabet {0, ..., b-1}. 2 <= b <= 65536; the upper
/// bound is practical (dense word tables, one-integer-per-digit file format).
class Base {
public:
  static constexpr std::uint32_t kMin = 2;
  static constexpr std::uint32_t kMax = 1u << 16;

  explicit Base(std::uint32_t digit_count);

  std::uint32_t value() const noexcept { return b_; }
  digit_t max_digit() const noexcept { return b_ - 1; }
  bool contains(digit_t d) const noexcept { return d < b_; }

  bool operator==(const Base&) const = default;

private:
  std::uint32_t b_;
};

/// Finite ordered digit sequence over one base. May be empty.
class DigitWord {
public:
  DigitWord(Base base, std::vector<digit_t> digits);
  static DigitWord empty(Base base) { return DigitWord(base, {}); }

  /// One ASCII digit character per digit; requires base <= 10.
  static DigitWord parse(std::string_view text, Base base);

  Base base() const noexcept { return base_; }
  const std::vector<digit_t>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool is_empty() const noexcept { return digits_.empty(); }
  digit_t operator[](std::size_t i) const { return digits_[i]; }

  void push_back(digit_t d);

  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }

  /// "141" for base <= 10, comma-separated integers otherwise.
  std::string str() const;

  bool operator==(const DigitWord&) const = default;

private:
  Base base_;
  std::vector<digit_t> digits_;
};

/// Exact probability vector p_0..p_{b-1}: every entry >= 0, sum exactly 1.
/// Immutable after construction via make_distribution / uniform_distribution.
class DigitDistribution {
public:
  Base base() const noexcept { return base_; }
  const std::vector<Rational>& probabilities() const noexcept { return p_; }
  const Rational& probability(digit_t d) const;

  /// The digit carrying probability exactly 1, if any.
  std::optional<digit_t> unit_mass_digit() const;

  bool operator==(const DigitDistribution&) const = default;

private:
  friend DigitDistribution make_distribution(Base, std::vector<Rational>);
  DigitDistribution(Base base, std::vector<Rational> p) : base_(base), p_(std::move(p)) {}

  Base base_;
  std::vector<Rational> p_;
};

/// Validates and builds a distribution. WrongArity if the vector length is not
/// b, NegativeMass if any entry is negative, NonUnitMass if the sum is not 1.
DigitDistribution make_distribution(Base base, std::vector<Rational> probabilities);

/// p_r = 1/b for every digit.
DigitDistribution uniform_distribution(Base base);

/// Product of the digit probabilities along the word; 1 for the empty word.
Rational word_probability(const DigitDistribution& dist, const DigitWord& word);

// Distribution text format (one distribution per file):
//   base <b>
//   <p_0> <p_1> ... <p_{b-1}>
// Probabilities are rationals "n/d" or integers; decimals are a parse error.
DigitDistribution parse_distribution(std::istream& in);
DigitDistribution parse_distribution(const std::string& text);
DigitDistribution load_distribution(const std::string& path);
std::string format_distribution(const DigitDistribution& dist);

}  // namespace steinhaus
