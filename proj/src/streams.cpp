#include "steinhaus/streams.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "steinhaus/errors.hpp"
#include "steinhaus/integer_math.hpp"

namespace steinhaus {

std::vector<digit_t> DigitStream::take(std::size_t n) {
  std::vector<digit_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto d = next();
    if (!d) break;
    out.push_back(*d);
  }
  return out;
}

RationalDigitStream::RationalDigitStream(const Rational& x, Base base)
    : DigitStream(base, "rational:" + x.str()),
      remainder_(x.numerator()),
      denominator_(x.denominator()),
      base_value_(base.value()) {
  if (x.is_negative() || x >= Rational(1)) {
    fail(ErrorKind::OutOfRange, "rational_digits requires x in [0,1), got " + x.str());
  }
}

std::optional<digit_t> RationalDigitStream::next() {
  remainder_ *= base_value_;
  Integer d = remainder_ / denominator_;
  remainder_ -= d * denominator_;
  return static_cast<digit_t>(d.get_ui());
}

SqrtDigitStream::SqrtDigitStream(const Integer& m, Base base)
    : DigitStream(base, "sqrt:" + m.get_str()),
      scaled_target_(m),
      root_(0),
      base_sq_(Integer(base.value()) * Integer(base.value())) {
  if (m < 2) fail(ErrorKind::NotANumber, "sqrt digit source requires m >= 2, got " + m.get_str());
  root_ = isqrt(m);
  if (root_ * root_ == m) {
    fail(ErrorKind::PerfectSquare, m.get_str() + " is a perfect square");
  }
}

std::optional<digit_t> SqrtDigitStream::next() {
  scaled_target_ *= base_sq_;
  const Integer candidate = root_ * Integer(base().value());
  // largest d in [0, b) with (candidate + d)^2 <= scaled_target_
  digit_t lo = 0;
  digit_t hi = base().max_digit();
  while (lo < hi) {
    const digit_t mid = lo + (hi - lo + 1) / 2;
    Integer trial = candidate + mid;
    if (trial * trial <= scaled_target_) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  root_ = candidate + lo;
  return lo;
}

SampleStream::SampleStream(const DigitDistribution& dist, Seed seed)
    : DigitStream(dist.base(), "sample:seed=" + std::to_string(seed.value)),
      gen_(seed),
      range_(1) {
  for (const Rational& p : dist.probabilities()) {
    mpz_lcm(range_.get_mpz_t(), range_.get_mpz_t(), p.denominator().get_mpz_t());
  }
  weights_.reserve(dist.base().value());
  for (const Rational& p : dist.probabilities()) {
    weights_.push_back(p.numerator() * (range_ / p.denominator()));
  }
  small_range_ = range_.fits_ulong_p() != 0;
  if (small_range_) {
    range64_ = static_cast<std::uint64_t>(range_.get_ui());
    cumulative64_.reserve(weights_.size());
    std::uint64_t acc = 0;
    for (const Integer& w : weights_) {
      acc += static_cast<std::uint64_t>(w.get_ui());
      cumulative64_.push_back(acc);
    }
  } else {
    const std::size_t bits = mpz_sizeinbase(range_.get_mpz_t(), 2);
    words_ = (bits + 63) / 64;
    const Integer space = Integer(1) << (64 * words_);
    wide_limit_ = space - space % range_;
  }
}

digit_t SampleStream::lookup(std::uint64_t u) const {
  auto it = std::upper_bound(cumulative64_.begin(), cumulative64_.end(), u);
  return static_cast<digit_t>(it - cumulative64_.begin());
}

digit_t SampleStream::lookup_big(const Integer& u) const {
  Integer acc = 0;
  for (digit_t r = 0; r + 1 < weights_.size(); ++r) {
    acc += weights_[r];
    if (u < acc) return r;
  }
  return static_cast<digit_t>(weights_.size() - 1);
}

std::optional<digit_t> SampleStream::next() {
  if (small_range_) {
    return lookup(uniform_below(gen_, range64_));
  }
  for (;;) {
    Integer value = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      value <<= 64;
      value += Integer(static_cast<unsigned long>(gen_.next()));
    }
    if (value < wide_limit_) return lookup_big(value % range_);
  }
}

BlockPatternStream::BlockPatternStream(digit_t a, Base base)
    : DigitStream(base, "steinhaus:" + std::to_string(a)), a_(a), remaining_(1) {
  if (!base.contains(a)) {
    fail(ErrorKind::InvalidDigit,
         "digit " + std::to_string(a) + " invalid for base " + std::to_string(base.value()));
  }
  if (a == 0) {
    fail(ErrorKind::DegenerateDigit, "block pattern with a = 0 collapses to the zero stream");
  }
}

std::optional<digit_t> BlockPatternStream::next() {
  if (remaining_ > 0) {
    --remaining_;
    return a_;
  }
  ++block_;
  remaining_ = block_;
  return 0;
}

FixedStream::FixedStream(DigitWord digits, std::string description)
    : DigitStream(digits.base(), std::move(description), digits.size()),
      digits_(std::move(digits)) {}

std::optional<digit_t> FixedStream::next() {
  if (pos_ >= digits_.size()) return std::nullopt;
  return digits_[pos_++];
}

std::unique_ptr<RationalDigitStream> rational_digits(const Rational& x, Base base) {
  return std::make_unique<RationalDigitStream>(x, base);
}

std::unique_ptr<SqrtDigitStream> sqrt_digits(const Integer& m, Base base) {
  return std::make_unique<SqrtDigitStream>(m, base);
}

std::unique_ptr<SampleStream> sample_stream(const DigitDistribution& dist, Seed seed) {
  return std::make_unique<SampleStream>(dist, seed);
}

std::unique_ptr<BlockPatternStream> steinhaus_example_stream(digit_t a, Base base) {
  return std::make_unique<BlockPatternStream>(a, base);
}

std::unique_ptr<FixedStream> file_stream(const std::string& path, Base base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot open digit file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::vector<digit_t> digits;
  if (base.value() <= 10) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c < '0' || c > '9' || static_cast<digit_t>(c - '0') >= base.value()) {
        fail(ErrorKind::InvalidDigit, std::string("'") + c + "' at position " +
                                          std::to_string(digits.size() + 1) + " invalid for base " +
                                          std::to_string(base.value()));
      }
      digits.push_back(static_cast<digit_t>(c - '0'));
    }
  } else {
    std::istringstream tokens(text);
    std::string token;
    while (tokens >> token) {
      bool ok = !token.empty() &&
                std::all_of(token.begin(), token.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      unsigned long value = 0;
      if (ok) {
        try {
          value = std::stoul(token);
        } catch (const std::exception&) {
          ok = false;
        }
      }
      if (!ok || value >= base.value()) {
        fail(ErrorKind::InvalidDigit, "'" + token + "' at position " +
                                          std::to_string(digits.size() + 1) + " invalid for base " +
                                          std::to_string(base.value()));
      }
      digits.push_back(static_cast<digit_t>(value));
    }
  }
  return std::make_unique<FixedStream>(DigitWord(base, std::move(digits)), "file:" + path);
}

std::unique_ptr<FixedStream> fixed_stream(DigitWord digits) {
  return std::make_unique<FixedStream>(std::move(digits), "fixed");
}

}  // namespace steinhaus
