#include "steinhaus/alphabet.hpp"

#include <fstream>
#include <sstream>

#include "steinhaus/errors.hpp"

namespace steinhaus {

Base::Base(std::uint32_t digit_count) : b_(digit_count) {
  if (digit_count < kMin || digit_count > kMax) {
    fail(ErrorKind::InvalidArgument,
         "base must be in [2, 65536], got " + std::to_string(digit_count));
  }
}

DigitWord::DigitWord(Base base, std::vector<digit_t> digits)
    : base_(base), digits_(std::move(digits)) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (!base_.contains(digits_[i])) {
      fail(ErrorKind::InvalidDigit, "digit " + std::to_string(digits_[i]) + " at position " +
                                        std::to_string(i + 1) + " invalid for base " +
                                        std::to_string(base_.value()));
    }
  }
}

DigitWord DigitWord::parse(std::string_view text, Base base) {
  if (base.value() > 10) {
    fail(ErrorKind::InvalidArgument, "digit-string form requires base <= 10");
  }
  std::vector<digit_t> digits;
  digits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      fail(ErrorKind::InvalidDigit,
           std::string("character '") + c + "' at position " + std::to_string(i + 1));
    }
    digits.push_back(static_cast<digit_t>(c - '0'));
  }
  return DigitWord(base, std::move(digits));
}

void DigitWord::push_back(digit_t d) {
  if (!base_.contains(d)) {
    fail(ErrorKind::InvalidDigit,
         "digit " + std::to_string(d) + " invalid for base " + std::to_string(base_.value()));
  }
  digits_.push_back(d);
}

std::string DigitWord::str() const {
  std::string out;
  if (base_.value() <= 10) {
    out.reserve(digits_.size());
    for (digit_t d : digits_) out += static_cast<char>('0' + d);
  } else {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(digits_[i]);
    }
  }
  return out;
}

const Rational& DigitDistribution::probability(digit_t d) const {
  if (!base_.contains(d)) {
    fail(ErrorKind::InvalidDigit,
         "digit " + std::to_string(d) + " invalid for base " + std::to_string(base_.value()));
  }
  return p_[d];
}

std::optional<digit_t> DigitDistribution::unit_mass_digit() const {
  for (digit_t d = 0; d < base_.value(); ++d) {
    if (p_[d] == Rational(1)) return d;
  }
  return std::nullopt;
}

DigitDistribution make_distribution(Base base, std::vector<Rational> probabilities) {
  if (probabilities.size() != base.value()) {
    fail(ErrorKind::WrongArity, "expected " + std::to_string(base.value()) +
                                    " probabilities, got " + std::to_string(probabilities.size()));
  }
  Rational sum;
  for (const Rational& p : probabilities) {
    if (p.is_negative()) fail(ErrorKind::NegativeMass, "negative probability " + p.str());
    sum += p;
  }
  if (sum != Rational(1)) fail(ErrorKind::NonUnitMass, "probabilities sum to " + sum.str());
  return DigitDistribution(base, std::move(probabilities));
}

DigitDistribution uniform_distribution(Base base) {
  std::vector<Rational> p(base.value(), Rational(1, static_cast<long>(base.value())));
  return make_distribution(base, std::move(p));
}

Rational word_probability(const DigitDistribution& dist, const DigitWord& word) {
  if (dist.base() != word.base()) {
    fail(ErrorKind::BaseMismatch, "word base " + std::to_string(word.base().value()) +
                                      " vs distribution base " +
                                      std::to_string(dist.base().value()));
  }
  Rational product = 1;
  for (digit_t d : word) product *= dist.probability(d);
  return product;
}

DigitDistribution parse_distribution(std::istream& in) {
  std::string keyword;
  if (!(in >> keyword) || keyword != "base") {
    fail(ErrorKind::ParseError, "distribution file must start with 'base <b>'");
  }
  long long b = 0;
  if (!(in >> b) || b < static_cast<long long>(Base::kMin) ||
      b > static_cast<long long>(Base::kMax)) {
    fail(ErrorKind::ParseError, "invalid base in distribution file");
  }
  Base base(static_cast<std::uint32_t>(b));
  std::vector<Rational> p;
  p.reserve(base.value());
  std::string token;
  for (std::uint32_t i = 0; i < base.value(); ++i) {
    if (!(in >> token)) {
      fail(ErrorKind::ParseError, "expected " + std::to_string(base.value()) +
                                      " probabilities, file ends after " + std::to_string(i));
    }
    p.push_back(Rational::parse(token));
  }
  if (in >> token) {
    fail(ErrorKind::ParseError, "trailing content in distribution file: '" + token + "'");
  }
  return make_distribution(base, std::move(p));
}

DigitDistribution parse_distribution(const std::string& text) {
  std::istringstream in(text);
  return parse_distribution(in);
}

DigitDistribution load_distribution(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open distribution file '" + path + "'");
  return parse_distribution(in);
}

std::string format_distribution(const DigitDistribution& dist) {
  std::string out = "base " + std::to_string(dist.base().value()) + "\n";
  const auto& p = dist.probabilities();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += p[i].str();
  }
  out += '\n';
  return out;
}

}  // namespace steinhaus
