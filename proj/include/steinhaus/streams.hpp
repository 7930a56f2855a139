#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "steinhaus/alphabet.hpp"
#include "steinhaus/rng.hpp"

namespace steinhaus {

/// Producer of base-b digits. Single-consumer: next() advances an internal
/// cursor, so one instance must not be shared across threads; distinct
/// instances are independent. Deterministic sources yield identical sequences
/// across runs for identical construction parameters.
class DigitStream {
public:
  virtual ~DigitStream() = default;

  /// Next digit, or nullopt when the stream is exhausted (only finite
  /// sources exhaust).
  virtual std::optional<digit_t> next() = 0;

  Base base() const noexcept { return base_; }
  const std::string& description() const noexcept { return description_; }
  std::optional<std::uint64_t> known_length() const noexcept { return length_; }

  /// Collects up to n digits; shorter only when the stream exhausts.
  std::vector<digit_t> take(std::size_t n);

protected:
  DigitStream(Base base, std::string description,
              std::optional<std::uint64_t> length = std::nullopt)
      : base_(base), description_(std::move(description)), length_(length) {}

private:
  Base base_;
  std::string description_;
  std::optional<std::uint64_t> length_;
};

/// Canonical base-b expansion of a rational in [0,1) by exact long division.
/// Terminating values get the zeros tail, never the trailing-(b-1)s form.
class RationalDigitStream final : public DigitStream {
public:
  RationalDigitStream(const Rational& x, Base base);
  std::optional<digit_t> next() override;

private:
  Integer remainder_;
  Integer denominator_;
  Integer base_value_;
};

/// Fractional digits of sqrt(m) for a non-square integer m >= 2. Digit k is
/// extracted from s_k = isqrt(m * b^(2k)) incrementally: the next scaled root
/// is the largest s_k*b + d whose square still fits, so s_{k+1} div b = s_k
/// by construction. Equivalence with fresh isqrt is a test obligation.
class SqrtDigitStream final : public DigitStream {
public:
  SqrtDigitStream(const Integer& m, Base base);
  std::optional<digit_t> next() override;

  /// Current s_k (after k digits were produced); exposed for the
  /// fresh-isqrt consistency check.
  const Integer& scaled_root() const noexcept { return root_; }

private:
  Integer scaled_target_;  // m * b^(2k)
  Integer root_;           // isqrt(scaled_target_)
  Integer base_sq_;
};

/// I.i.d. digits with exact probabilities p_r. Inverse CDF over a uniform
/// integer draw from {0, ..., D-1}, D a common multiple of the probability
/// denominators, so each digit's per-draw probability is exactly p_r; no
/// floating point. The word stream comes from SplitMix64(seed).
class SampleStream final : public DigitStream {
public:
  SampleStream(const DigitDistribution& dist, Seed seed);
  std::optional<digit_t> next() override;

  /// Inverse-CDF partition: weight(r)/range() == p_r exactly.
  const Integer& range() const noexcept { return range_; }
  const std::vector<Integer>& weights() const noexcept { return weights_; }

private:
  digit_t lookup(std::uint64_t u) const;
  digit_t lookup_big(const Integer& u) const;

  SplitMix64 gen_;
  Integer range_;
  std::vector<Integer> weights_;
  // fast path when the range fits in 64 bits
  bool small_range_;
  std::uint64_t range64_ = 0;
  std::vector<std::uint64_t> cumulative64_;
  // wide path: draw words_ 64-bit words, reject at the largest multiple of
  // range_ below 2^(64 words_)
  std::size_t words_ = 0;
  Integer wide_limit_;
};

/// The block pattern a,0,a,a,0,a,a,a,0,...: block i is i copies of digit a
/// followed by one 0. Zeros sit exactly at positions i(i+3)/2.
class BlockPatternStream final : public DigitStream {
public:
  BlockPatternStream(digit_t a, Base base);
  std::optional<digit_t> next() override;

private:
  digit_t a_;
  std::uint64_t block_ = 1;     // current block number
  std::uint64_t remaining_;     // copies of a left in this block (then one 0)
};

/// Digits held in memory (file contents, test fixtures).
class FixedStream final : public DigitStream {
public:
  FixedStream(DigitWord digits, std::string description);
  std::optional<digit_t> next() override;

private:
  DigitWord digits_;
  std::size_t pos_ = 0;
};

// Factories matching the digit-source catalog.

std::unique_ptr<RationalDigitStream> rational_digits(const Rational& x, Base base);

/// PerfectSquare for squares, NotANumber for m < 2.
std::unique_ptr<SqrtDigitStream> sqrt_digits(const Integer& m, Base base);

std::unique_ptr<SampleStream> sample_stream(const DigitDistribution& dist, Seed seed);

/// DegenerateDigit for a = 0 (the pattern would collapse to all zeros).
std::unique_ptr<BlockPatternStream> steinhaus_example_stream(digit_t a, Base base);

/// Whole-file read. Base <= 10: one ASCII digit character per digit,
/// whitespace ignored. Base > 10: whitespace-separated decimal integers.
/// InvalidDigit reports the 1-based digit position.
std::unique_ptr<FixedStream> file_stream(const std::string& path, Base base);

std::unique_ptr<FixedStream> fixed_stream(DigitWord digits);

}  // namespace steinhaus
