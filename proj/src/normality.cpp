#include "steinhaus/normality.hpp"

#include <algorithm>

#include "steinhaus/errors.hpp"
#include "steinhaus/integer_math.hpp"

namespace steinhaus {

namespace {

/// b^k for every k <= K as uint64, or nullopt when the sum would exceed the
/// bound (computed in big integers, no overflow).
std::optional<std::vector<std::uint64_t>> dense_sizes(Base base, unsigned max_len,
                                                      std::uint64_t bound) {
  Integer total = 0;
  Integer power = 1;
  std::vector<std::uint64_t> sizes;
  sizes.reserve(max_len);
  for (unsigned k = 1; k <= max_len; ++k) {
    power *= base.value();
    total += power;
    if (total > Integer(static_cast<unsigned long>(bound))) return std::nullopt;
    sizes.push_back(static_cast<std::uint64_t>(power.get_ui()));
  }
  return sizes;
}

std::uint64_t encode(const DigitWord& word, std::uint32_t base) {
  std::uint64_t code = 0;
  for (digit_t d : word) code = code * base + d;
  return code;
}

DigitWord decode(std::uint64_t code, unsigned len, Base base) {
  std::vector<digit_t> digits(len);
  for (unsigned i = len; i-- > 0;) {
    digits[i] = static_cast<digit_t>(code % base.value());
    code /= base.value();
  }
  return DigitWord(base, std::move(digits));
}

}  // namespace

WordCounter::WordCounter(Base base, unsigned max_len, Storage storage,
                         std::uint64_t table_bound)
    : base_(base), max_len_(max_len) {
  if (max_len_ == 0) fail(ErrorKind::InvalidArgument, "word counter requires K >= 1");
  window_.assign(max_len_, 0);
  auto sizes = dense_sizes(base_, max_len_, table_bound);
  switch (storage) {
    case Storage::Auto:
      dense_ = sizes.has_value();
      break;
    case Storage::Dense:
      if (!sizes) {
        fail(ErrorKind::ExplosiveK, "dense word table for base " +
                                        std::to_string(base_.value()) + ", K = " +
                                        std::to_string(max_len_) + " exceeds the bound of " +
                                        std::to_string(table_bound) + " entries");
      }
      dense_ = true;
      break;
    case Storage::Sparse:
      dense_ = false;
      break;
  }
  if (dense_) {
    tables_.reserve(max_len_);
    for (std::uint64_t s : *sizes) tables_.emplace_back(s, 0);
  } else {
    maps_.resize(max_len_);
  }
}

void WordCounter::consume(digit_t d) {
  if (!base_.contains(d)) {
    fail(ErrorKind::InvalidDigit,
         "digit " + std::to_string(d) + " invalid for base " + std::to_string(base_.value()));
  }
  window_[consumed_ % max_len_] = d;
  ++consumed_;
  if (consumed_ < max_len_) return;
  ++credited_;
  // The start consumed_-K+1 just completed its K-window; credit each prefix.
  if (dense_) {
    std::uint64_t code = 0;
    for (unsigned j = 0; j < max_len_; ++j) {
      code = code * base_.value() + window_[(consumed_ + j) % max_len_];
      ++tables_[j][code];
    }
  } else {
    std::vector<digit_t> key;
    key.reserve(max_len_);
    for (unsigned j = 0; j < max_len_; ++j) {
      key.push_back(window_[(consumed_ + j) % max_len_]);
      ++maps_[j][key];
    }
  }
}

void WordCounter::consume(DigitStream& stream, std::uint64_t count) {
  if (stream.base() != base_) {
    fail(ErrorKind::BaseMismatch, "stream base " + std::to_string(stream.base().value()) +
                                      " vs counter base " + std::to_string(base_.value()));
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    auto d = stream.next();
    if (!d) {
      fail(ErrorKind::StreamExhausted, "stream ended after " + std::to_string(i) + " of " +
                                           std::to_string(count) + " digits");
    }
    consume(*d);
  }
}

std::uint64_t WordCounter::count_by_code(unsigned len, std::uint64_t code) const {
  if (dense_) return tables_[len - 1][code];
  auto key = decode(code, len, base_).digits();
  auto it = maps_[len - 1].find(key);
  return it == maps_[len - 1].end() ? 0 : it->second;
}

std::uint64_t WordCounter::count(const DigitWord& word) const {
  if (word.base() != base_) {
    fail(ErrorKind::BaseMismatch, "word base " + std::to_string(word.base().value()) +
                                      " vs counter base " + std::to_string(base_.value()));
  }
  if (word.is_empty() || word.size() > max_len_) {
    fail(ErrorKind::InvalidArgument,
         "word length must be in [1, " + std::to_string(max_len_) + "]");
  }
  if (dense_) return tables_[word.size() - 1][encode(word, base_.value())];
  auto it = maps_[word.size() - 1].find(word.digits());
  return it == maps_[word.size() - 1].end() ? 0 : it->second;
}

void WordCounter::merge(const WordCounter& other) {
  if (other.base_ != base_ || other.max_len_ != max_len_) {
    fail(ErrorKind::InvalidArgument, "merging counters with different base or K");
  }
  if (dense_ != other.dense_) {
    fail(ErrorKind::InvalidArgument, "merging counters with different storage backends");
  }
  if (dense_) {
    for (unsigned k = 0; k < max_len_; ++k) {
      for (std::size_t i = 0; i < tables_[k].size(); ++i) tables_[k][i] += other.tables_[k][i];
    }
  } else {
    for (unsigned k = 0; k < max_len_; ++k) {
      for (const auto& [key, c] : other.maps_[k]) maps_[k][key] += c;
    }
  }
  credited_ += other.credited_;
  consumed_ = credited_ + max_len_ - 1;
}

std::uint64_t count_simple(DigitStream& stream, digit_t r, std::uint64_t n) {
  if (!stream.base().contains(r)) {
    fail(ErrorKind::InvalidDigit, "digit " + std::to_string(r) + " invalid for base " +
                                      std::to_string(stream.base().value()));
  }
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto d = stream.next();
    if (!d) {
      fail(ErrorKind::StreamExhausted,
           "stream ended after " + std::to_string(i) + " of " + std::to_string(n) + " digits");
    }
    if (*d == r) ++hits;
  }
  return hits;
}

std::uint64_t count_word(DigitStream& stream, const DigitWord& word, std::uint64_t n) {
  if (stream.base() != word.base()) {
    fail(ErrorKind::BaseMismatch, "stream base " + std::to_string(stream.base().value()) +
                                      " vs word base " + std::to_string(word.base().value()));
  }
  if (word.is_empty()) fail(ErrorKind::InvalidArgument, "count_word requires a non-empty word");
  const std::size_t k = word.size();
  const std::uint64_t total = n + k - 1;
  std::vector<digit_t> ring(k, 0);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < total; ++t) {
    auto d = stream.next();
    if (!d) {
      fail(ErrorKind::StreamExhausted, "stream ended after " + std::to_string(t) + " of " +
                                           std::to_string(total) + " digits");
    }
    ring[t % k] = *d;
    if (t + 1 < k) continue;
    bool match = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (ring[(t + 1 + j) % k] != word[j]) {
        match = false;
        break;
      }
    }
    if (match) ++hits;
  }
  return hits;
}

NormalityReport build_report(DigitStream& stream, std::uint64_t n, unsigned max_len,
                             const DigitDistribution& target, std::uint64_t table_bound,
                             WordCounter::Storage storage) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "build_report requires n >= 1");
  if (max_len == 0) fail(ErrorKind::InvalidArgument, "build_report requires K >= 1");
  if (stream.base() != target.base()) {
    fail(ErrorKind::BaseMismatch, "stream base " + std::to_string(stream.base().value()) +
                                      " vs target base " + std::to_string(target.base().value()));
  }
  const Base base = target.base();
  if (ipow(Integer(base.value()), max_len) > Integer(static_cast<unsigned long>(table_bound))) {
    fail(ErrorKind::ExplosiveK, "b^K = " + ipow(Integer(base.value()), max_len).get_str() +
                                    " exceeds the table bound of " + std::to_string(table_bound) +
                                    " entries");
  }

  WordCounter counter(base, max_len, storage, table_bound);
  counter.consume(stream, n + max_len - 1);

  NormalityReport report{base, max_len, n, target, {}, {}, Rational(0), 0};
  std::uint64_t words_per_len = 1;
  for (unsigned k = 1; k <= max_len; ++k) {
    words_per_len *= base.value();
    Rational level_max;
    for (std::uint64_t code = 0; code < words_per_len; ++code) {
      DigitWord word = decode(code, k, base);
      const std::uint64_t c = counter.count_by_code(k, code);
      Rational frequency = Rational(Integer(static_cast<unsigned long>(c)),
                                    Integer(static_cast<unsigned long>(n)));
      Rational target_p = word_probability(target, word);
      Rational deviation = (frequency - target_p).abs();
      if (deviation > level_max) level_max = deviation;
      if (deviation > report.max_deviation) {
        report.max_deviation = deviation;
        report.worst_row = report.rows.size();
      }
      report.rows.push_back(
          {std::move(word), c, std::move(frequency), std::move(target_p), std::move(deviation)});
    }
    report.max_deviation_by_length.push_back(std::move(level_max));
  }
  return report;
}

EpsNormalVerdict is_eps_normal(const NormalityReport& report, const Rational& epsilon) {
  if (!epsilon.is_positive()) {
    fail(ErrorKind::InvalidArgument, "epsilon must be > 0, got " + epsilon.str());
  }
  if (report.max_deviation <= epsilon) return {true, std::nullopt};
  return {false, report.rows[report.worst_row].word};
}

std::string format_report(const NormalityReport& report, const EpsNormalVerdict* verdict) {
  std::string out = "# word\tcount\tfrequency\ttarget\tdeviation\n";
  for (const ReportRow& row : report.rows) {
    out += row.word.str();
    out += '\t';
    out += std::to_string(row.count);
    out += '\t';
    out += row.frequency.str();
    out += '\t';
    out += row.target.str();
    out += '\t';
    out += row.deviation.str();
    out += '\n';
  }
  for (unsigned k = 1; k <= report.max_len; ++k) {
    out += "maxdev k=" + std::to_string(k) + " " + report.max_deviation_by_length[k - 1].str() +
           "\n";
  }
  if (verdict) {
    out += "eps-normal: ";
    out += verdict->normal ? "yes" : "no";
    if (verdict->witness) {
      out += ' ';
      out += verdict->witness->str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace steinhaus
