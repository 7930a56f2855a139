#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinhaus/alphabet.hpp"
#include "steinhaus/streams.hpp"

namespace steinhaus {

inline constexpr std::uint64_t kDefaultTableBound = 10'000'000;

/// Streaming counter of overlapping word occurrences for every length
/// k <= K simultaneously.
///
/// Window-start semantics: a start position i is credited, for all lengths at
/// once, when its full K-digit window completes. After consuming n + K - 1
/// digits the counter therefore holds, for every word B of length k <= K,
/// the number of start positions i in {1..n} with digits i..i+k-1 equal to B
/// (overlapping occurrences included).
///
/// Chunked counting: a long stream may be split into chunks overlapping by
/// K - 1 digits, counted independently, and combined with merge(); because a
/// start is only credited when its full window lies inside the chunk, merge
/// is plain count addition and no window is double counted.
///
/// Storage is a dense table (one slot per word, size sum of b^k) when that
/// fits the table bound, otherwise an ordered sparse map. Both backends
/// produce identical counts and reports.
class WordCounter {
public:
  enum class Storage { Auto, Dense, Sparse };

  WordCounter(Base base, unsigned max_len, Storage storage = Storage::Auto,
              std::uint64_t table_bound = kDefaultTableBound);

  Base base() const noexcept { return base_; }
  unsigned max_len() const noexcept { return max_len_; }
  bool dense() const noexcept { return dense_; }

  void consume(digit_t d);

  /// Feeds exactly `count` digits from the stream; StreamExhausted if the
  /// stream ends early.
  void consume(DigitStream& stream, std::uint64_t count);

  std::uint64_t digits_consumed() const noexcept { return consumed_; }

  /// Number of credited start positions (consumed - K + 1, at least 0).
  std::uint64_t positions() const noexcept {
    return consumed_ >= max_len_ ? consumed_ - max_len_ + 1 : 0;
  }

  /// Occurrence count of a word of length 1..K.
  std::uint64_t count(const DigitWord& word) const;

  /// Count by positional word code (word = base-b digits of `code`, length
  /// `len`); the enumeration order reports use.
  std::uint64_t count_by_code(unsigned len, std::uint64_t code) const;

  /// Adds the counts of a counter that continued this one's stream with
  /// K - 1 digits of overlap.
  void merge(const WordCounter& other);

private:
  Base base_;
  unsigned max_len_;
  bool dense_;
  std::uint64_t consumed_ = 0;
  std::uint64_t credited_ = 0;

  std::vector<digit_t> window_;                       // ring buffer of the last K digits
  std::vector<std::vector<std::uint64_t>> tables_;    // dense: per length, b^k slots
  std::vector<std::map<std::vector<digit_t>, std::uint64_t>> maps_;  // sparse
};

/// One row per word: occurrences, exact empirical frequency count/n, the
/// target product of digit probabilities, and |frequency - target|.
struct ReportRow {
  DigitWord word;
  std::uint64_t count;
  Rational frequency;
  Rational target;
  Rational deviation;
};

/// Empirical word statistics of a digit stream against a target
/// distribution, for all word lengths 1..K. Rows are ordered by length, then
/// by positional code, and cover every word including zero counts. All
/// arithmetic is exact.
struct NormalityReport {
  Base base;
  unsigned max_len;
  std::uint64_t positions;  // n
  DigitDistribution target;
  std::vector<ReportRow> rows;
  std::vector<Rational> max_deviation_by_length;  // index k-1
  Rational max_deviation;
  std::size_t worst_row;  // index into rows of the first row attaining max_deviation
};

/// Count of positions i <= n with digit(i) = r. Consumes n digits.
std::uint64_t count_simple(DigitStream& stream, digit_t r, std::uint64_t n);

/// Count of (possibly overlapping) occurrences of the word at start
/// positions 1..n. Consumes n + len - 1 digits.
std::uint64_t count_word(DigitStream& stream, const DigitWord& word, std::uint64_t n);

/// Single pass over n + K - 1 digits filling all word counts for lengths
/// 1..K. ExplosiveK when b^K exceeds the table bound (the report enumerates
/// every word). Storage is selectable for the dense/sparse equivalence tests.
NormalityReport build_report(DigitStream& stream, std::uint64_t n, unsigned max_len,
                             const DigitDistribution& target,
                             std::uint64_t table_bound = kDefaultTableBound,
                             WordCounter::Storage storage = WordCounter::Storage::Auto);

struct EpsNormalVerdict {
  bool normal;
  std::optional<DigitWord> witness;  // worst offending word when !normal
};

/// True iff every word of every length <= K deviates from its target by at
/// most epsilon. Finite-n surrogate: epsilon and n always travel with the
/// verdict, it claims nothing about limits.
EpsNormalVerdict is_eps_normal(const NormalityReport& report, const Rational& epsilon);

/// Tab-separated rows "word<TAB>count<TAB>frequency<TAB>target<TAB>deviation"
/// (leading '#' header), then one "maxdev k=<k> <rational>" line per length,
/// then "eps-normal: yes|no [witness]" when a verdict is supplied.
std::string format_report(const NormalityReport& report,
                          const EpsNormalVerdict* verdict = nullptr);

}  // namespace steinhaus
