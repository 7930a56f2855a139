#include "steinhaus/campaign.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "steinhaus/errors.hpp"
#include "steinhaus/expansion.hpp"

namespace steinhaus {

namespace {

void validate(const CampaignConfig& config) {
  if (config.samples == 0) fail(ErrorKind::InvalidArgument, "campaign requires m >= 1");
  if (config.length == 0) fail(ErrorKind::InvalidArgument, "campaign requires n >= 1");
  if (config.max_len == 0) fail(ErrorKind::InvalidArgument, "campaign requires K >= 1");
  if (!config.epsilon.is_positive()) {
    fail(ErrorKind::InvalidArgument, "campaign requires epsilon > 0");
  }
}

SampleVerdict run_one(const CampaignConfig& config, std::uint64_t index) {
  const Seed seed = derive_sample_seed(config.seed, index);
  auto stream = sample_stream(config.dist, seed);
  NormalityReport report =
      build_report(*stream, config.length, config.max_len, config.dist);
  EpsNormalVerdict verdict = is_eps_normal(report, config.epsilon);
  return {index, seed, verdict.normal, report.max_deviation};
}

std::uint64_t parse_u64_field(std::istream& in, const std::string& key) {
  std::string token;
  if (!(in >> token) || token != key) {
    fail(ErrorKind::ParseError, "expected '" + key + "' in campaign result");
  }
  std::uint64_t value = 0;
  if (!(in >> value)) fail(ErrorKind::ParseError, "expected integer after '" + key + "'");
  return value;
}

}  // namespace

Rational CampaignResult::fraction() const {
  return Rational(Integer(static_cast<unsigned long>(normal_count)),
                  Integer(static_cast<unsigned long>(config.samples)));
}

Seed derive_sample_seed(Seed base_seed, std::uint64_t index) {
  return Seed{SplitMix64::mix64(base_seed.value + index * SplitMix64::kGamma)};
}

CampaignResult run_campaign(const CampaignConfig& config, unsigned threads) {
  validate(config);
  const std::uint64_t m = config.samples;
  std::vector<SampleVerdict> verdicts(m);

  unsigned worker_count = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (worker_count == 0) worker_count = 1;
  if (worker_count > m) worker_count = static_cast<unsigned>(m);

  if (worker_count == 1) {
    for (std::uint64_t i = 0; i < m; ++i) verdicts[i] = run_one(config, i + 1);
  } else {
    std::atomic<std::uint64_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        const std::uint64_t i = cursor.fetch_add(1);
        if (i >= m) return;
        try {
          verdicts[i] = run_one(config, i + 1);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  CampaignResult result{config, std::move(verdicts), 0};
  for (const SampleVerdict& v : result.verdicts) {
    if (v.eps_normal) ++result.normal_count;
  }
  return result;
}

std::string format_campaign_result(const CampaignResult& result) {
  const CampaignConfig& c = result.config;
  std::string out = "montecarlo v1\n";
  out += "base " + std::to_string(c.dist.base().value()) + "\n";
  out += "dist";
  for (const Rational& p : c.dist.probabilities()) {
    out += ' ';
    out += p.str();
  }
  out += '\n';
  out += "m " + std::to_string(c.samples) + "\n";
  out += "n " + std::to_string(c.length) + "\n";
  out += "maxk " + std::to_string(c.max_len) + "\n";
  out += "epsilon " + c.epsilon.str() + "\n";
  out += "seed " + std::to_string(c.seed.value) + "\n";
  for (const SampleVerdict& v : result.verdicts) {
    out += "sample " + std::to_string(v.index) + " seed " + std::to_string(v.seed.value) +
           " normal " + (v.eps_normal ? "yes" : "no") + " maxdev " + v.max_deviation.str() + "\n";
  }
  out += "fraction: " + std::to_string(result.normal_count) + "/" + std::to_string(c.samples) +
         "\n";
  return out;
}

CampaignResult parse_campaign_result(std::istream& in) {
  std::string token;
  if (!(in >> token) || token != "montecarlo") {
    fail(ErrorKind::ParseError, "campaign result must start with 'montecarlo v1'");
  }
  if (!(in >> token) || token != "v1") {
    fail(ErrorKind::ParseError, "unsupported campaign result version");
  }
  const std::uint64_t base_value = parse_u64_field(in, "base");
  if (base_value < Base::kMin || base_value > Base::kMax) {
    fail(ErrorKind::ParseError, "invalid base in campaign result");
  }
  Base base(static_cast<std::uint32_t>(base_value));
  if (!(in >> token) || token != "dist") {
    fail(ErrorKind::ParseError, "expected 'dist' in campaign result");
  }
  std::vector<Rational> probabilities;
  probabilities.reserve(base.value());
  for (std::uint32_t i = 0; i < base.value(); ++i) {
    if (!(in >> token)) fail(ErrorKind::ParseError, "truncated dist line in campaign result");
    probabilities.push_back(Rational::parse(token));
  }

  CampaignConfig config{make_distribution(base, std::move(probabilities)), 0, 0, 0, Rational(0),
                        Seed{}};
  config.samples = parse_u64_field(in, "m");
  config.length = parse_u64_field(in, "n");
  config.max_len = static_cast<unsigned>(parse_u64_field(in, "maxk"));
  if (!(in >> token) || token != "epsilon") {
    fail(ErrorKind::ParseError, "expected 'epsilon' in campaign result");
  }
  if (!(in >> token)) fail(ErrorKind::ParseError, "missing epsilon value");
  config.epsilon = Rational::parse(token);
  config.seed = Seed{parse_u64_field(in, "seed")};

  CampaignResult result{std::move(config), {}, 0};
  result.verdicts.reserve(result.config.samples);
  for (std::uint64_t i = 0; i < result.config.samples; ++i) {
    SampleVerdict v;
    v.index = parse_u64_field(in, "sample");
    v.seed = Seed{parse_u64_field(in, "seed")};
    if (!(in >> token) || token != "normal") {
      fail(ErrorKind::ParseError, "expected 'normal' in sample line");
    }
    if (!(in >> token) || (token != "yes" && token != "no")) {
      fail(ErrorKind::ParseError, "sample verdict must be yes or no");
    }
    v.eps_normal = token == "yes";
    if (!(in >> token) || token != "maxdev") {
      fail(ErrorKind::ParseError, "expected 'maxdev' in sample line");
    }
    if (!(in >> token)) fail(ErrorKind::ParseError, "missing maxdev value");
    v.max_deviation = Rational::parse(token);
    if (v.eps_normal) ++result.normal_count;
    result.verdicts.push_back(std::move(v));
  }
  if (!(in >> token) || token != "fraction:") {
    fail(ErrorKind::ParseError, "expected 'fraction:' line");
  }
  if (!(in >> token)) fail(ErrorKind::ParseError, "missing fraction value");
  const std::string expected =
      std::to_string(result.normal_count) + "/" + std::to_string(result.config.samples);
  if (token != expected) {
    fail(ErrorKind::ParseError,
         "fraction line '" + token + "' does not match verdicts ('" + expected + "')");
  }
  return result;
}

CampaignResult parse_campaign_result(const std::string& text) {
  std::istringstream in(text);
  return parse_campaign_result(in);
}

DemoResult normal_number_demo(const DigitDistribution& dist, std::uint64_t n, unsigned max_len,
                              const Rational& epsilon, Seed seed) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "demo requires n >= 1");
  if (max_len == 0) fail(ErrorKind::InvalidArgument, "demo requires K >= 1");
  if (!epsilon.is_positive()) fail(ErrorKind::InvalidArgument, "demo requires epsilon > 0");

  const Base base = dist.base();
  DemoResult out;
  if (dist.probability(base.max_digit()) == Rational(1)) {
    out.case_label = 'a';
    out.text =
        "normal-number demo: case (a)\n"
        "target puts probability 1 on digit " +
        std::to_string(base.max_digit()) +
        ", so every sampled sequence is that digit repeated forever\n"
        "its value is 1, whose canonical expansion has integer part 1 and fractional digits "
        "all 0\n"
        "the canonical expansion never ends in trailing " +
        std::to_string(base.max_digit()) +
        "s, so the one sequence carrying mass is excluded\n"
        "verdict: the set of normal numbers for this target has measure 0\n";
    return out;
  }

  out.case_label = 'b';
  // Sample a prefix, read it as an exact rational, and re-expand canonically;
  // the canonical stream is what number-level statistics consume.
  const std::uint64_t digit_count = n + max_len - 1;
  auto sampled = sample_stream(dist, seed);
  DigitWord prefix(base, sampled->take(digit_count));
  const Rational value = psi_value(prefix);
  auto canonical = rational_digits(value, base);
  NormalityReport report = build_report(*canonical, n, max_len, dist);
  EpsNormalVerdict verdict = is_eps_normal(report, epsilon);
  out.sample_eps_normal = verdict.normal;
  out.text = "normal-number demo: case (b)\n";
  out.text += "sampled " + std::to_string(digit_count) + " digits (seed " +
              std::to_string(seed.value) + "), value ~= " + value.decimal(12) +
              " (exact rational kept internally), re-expanded canonically\n";
  out.text += "max deviation " + report.max_deviation.str() + " vs epsilon " + epsilon.str() +
              " at n = " + std::to_string(n) + ", K = " + std::to_string(max_len) + "\n";
  out.text += std::string("sample-eps-normal: ") + (verdict.normal ? "yes" : "no") + "\n";
  return out;
}

}  // namespace steinhaus
