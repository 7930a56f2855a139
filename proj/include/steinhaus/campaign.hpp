#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steinhaus/normality.hpp"
#include "steinhaus/rng.hpp"

namespace steinhaus {

/// Parameters of a Monte Carlo normality campaign: m sampled sequences of
/// length n, word statistics up to length K, epsilon-normality threshold,
/// and the base seed all per-sample seeds derive from.
struct CampaignConfig {
  DigitDistribution dist;
  std::uint64_t samples = 0;  // m >= 1
  std::uint64_t length = 0;   // n >= 1
  unsigned max_len = 0;       // K >= 1
  Rational epsilon;           // > 0
  Seed seed;

  bool operator==(const CampaignConfig&) const = default;
};

struct SampleVerdict {
  std::uint64_t index = 0;  // 1-based
  Seed seed;
  bool eps_normal = false;
  Rational max_deviation;

  bool operator==(const SampleVerdict&) const = default;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<SampleVerdict> verdicts;  // ordered by index
  std::uint64_t normal_count = 0;

  /// normal_count / m as a canonical rational.
  Rational fraction() const;

  bool operator==(const CampaignResult&) const = default;
};

/// Seed of sample i (1-based): the i-th output of SplitMix64 seeded with the
/// campaign seed. Fixed and documented; pairwise distinct across indices.
Seed derive_sample_seed(Seed base_seed, std::uint64_t index);

/// Runs the campaign: sample i draws length + K - 1 digits from
/// sample_stream(dist, seed_i), builds the word-frequency report against
/// dist itself, and records the epsilon-normality verdict. Samples are
/// independent and fan out across threads (0 = hardware concurrency); the
/// result is ordered by index and bit-identical regardless of thread count.
CampaignResult run_campaign(const CampaignConfig& config, unsigned threads = 0);

// Line-oriented result format:
//   montecarlo v1
//   base <b>
//   dist <p_0> ... <p_{b-1}>
//   m <m> / n <n> / maxk <K> / epsilon <e> / seed <s>   (one per line)
//   sample <i> seed <s> normal <yes|no> maxdev <n/d>    (m lines)
//   fraction: <normal_count>/<m>                        (unreduced)
std::string format_campaign_result(const CampaignResult& result);
CampaignResult parse_campaign_result(std::istream& in);
CampaignResult parse_campaign_result(const std::string& text);

/// Illustration of number-level normality for a target distribution.
///
/// Case (a), some digit's probability is 1 and it is b-1: the sampled
/// sequence is the constant (b-1)s tail, its value is 1, and the canonical
/// expansion of 1 (integer part 1, fractional digits all zero) is excluded
/// from the trailing-(b-1)s form, which is why the set of normal numbers
/// carries measure 0 for this target.
///
/// Case (b), otherwise: samples a sequence, evaluates the sampled prefix to
/// an exact rational, re-expands it canonically, and classifies the
/// canonical stream against the target.
struct DemoResult {
  char case_label = 'b';                   // 'a' or 'b'
  std::optional<bool> sample_eps_normal;   // present in case (b)
  std::string text;                        // explanation + machine verdict lines
};

DemoResult normal_number_demo(const DigitDistribution& dist, std::uint64_t n, unsigned max_len,
                              const Rational& epsilon, Seed seed = Seed{0});

}  // namespace steinhaus
