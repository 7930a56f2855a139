#include "steinhaus/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steinhaus/campaign.hpp"
#include "steinhaus/errors.hpp"
#include "steinhaus/measure.hpp"

namespace steinhaus {

namespace {

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    std::uint64_t value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "invalid seed '" + text + "'");
  }
}

/// Fractional part of a nonnegative rational; integer parts are parsed and
/// discarded, statistics depend only on fractional digits.
Rational fractional_part(const Rational& x) {
  if (x.is_negative()) fail(ErrorKind::OutOfRange, "negative values have no digit expansion");
  Integer whole = x.numerator() / x.denominator();
  return x - Rational(whole);
}

/// --source grammar: rational:<n/d> | sqrt:<m> | sample:<distfile>:<seed> |
/// steinhaus:<a> | file:<path>
std::unique_ptr<DigitStream> make_source(const std::string& spec, Base base) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    fail(ErrorKind::ParseError, "source must look like scheme:args, got '" + spec + "'");
  }
  const std::string scheme = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (scheme == "rational") {
    return rational_digits(fractional_part(Rational::parse(rest)), base);
  }
  if (scheme == "sqrt") {
    try {
      return sqrt_digits(Integer(rest), base);
    } catch (const std::invalid_argument&) {
      fail(ErrorKind::ParseError, "invalid integer '" + rest + "' in sqrt source");
    }
  }
  if (scheme == "sample") {
    auto last = rest.rfind(':');
    if (last == std::string::npos) {
      fail(ErrorKind::ParseError, "sample source needs sample:<distfile>:<seed>");
    }
    DigitDistribution dist = load_distribution(rest.substr(0, last));
    if (dist.base() != base) {
      fail(ErrorKind::BaseMismatch,
           "sample distribution base " + std::to_string(dist.base().value()) +
               " vs requested base " + std::to_string(base.value()));
    }
    return sample_stream(dist, Seed{parse_seed(rest.substr(last + 1))});
  }
  if (scheme == "steinhaus") {
    try {
      std::size_t used = 0;
      unsigned long a = std::stoul(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(rest);
      return steinhaus_example_stream(static_cast<digit_t>(a), base);
    } catch (const std::invalid_argument&) {
      fail(ErrorKind::ParseError, "invalid digit '" + rest + "' in steinhaus source");
    } catch (const std::out_of_range&) {
      fail(ErrorKind::ParseError, "invalid digit '" + rest + "' in steinhaus source");
    }
  }
  if (scheme == "file") {
    return file_stream(rest, base);
  }
  fail(ErrorKind::ParseError, "unknown source scheme '" + scheme + "'");
}

/// Interval endpoints: "0."-prefixed digit string (exact finite expansion,
/// base <= 10) or a rational "n/d" / integer.
struct Endpoint {
  Rational value;
  std::optional<FiniteExpansion> exact;  // present when finitely expandable
};

Endpoint parse_endpoint(const std::string& text, Base base) {
  if (text.rfind("0.", 0) == 0) {
    DigitWord digits = DigitWord::parse(text.substr(2), base);
    FiniteExpansion fe = FiniteExpansion::from_word(std::move(digits));
    return {fe.value(), fe};
  }
  Rational x = Rational::parse(text);
  if (x.is_negative() || x > Rational(1)) {
    fail(ErrorKind::OutOfRange, "endpoint " + x.str() + " outside [0,1]");
  }
  try {
    return {x, FiniteExpansion::from_rational(x, base)};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFiniteExpansion) throw;
    return {x, std::nullopt};
  }
}

std::string value_line(const Rational& value, unsigned decimal_digits) {
  std::string line = value.str();
  if (decimal_digits > 0) {
    line += " ~= " + value.decimal(decimal_digits);
  }
  return line;
}

void emit_digits(const std::vector<digit_t>& digits, Base base, std::ostream& out) {
  constexpr std::size_t kPerLine = 80;
  if (base.value() <= 10) {
    std::string line;
    line.reserve(kPerLine);
    for (digit_t d : digits) {
      line += static_cast<char>('0' + d);
      if (line.size() == kPerLine) {
        out << line << '\n';
        line.clear();
      }
    }
    if (!line.empty()) out << line << '\n';
  } else {
    std::size_t on_line = 0;
    for (digit_t d : digits) {
      out << d;
      if (++on_line == kPerLine) {
        out << '\n';
        on_line = 0;
      } else {
        out << ' ';
      }
    }
    if (on_line != 0) out << '\n';
  }
}

struct MeasureArgs {
  std::string dist_path;
  std::vector<std::string> interval;
  std::string point;
  unsigned decimal_digits = 0;
  unsigned depth = 24;
};

int run_measure(const MeasureArgs& args) {
  DigitDistribution dist = load_distribution(args.dist_path);
  const Base base = dist.base();
  if (!args.point.empty()) {
    Endpoint p = parse_endpoint(args.point, base);
    std::cout << value_line(point_measure(p.value, dist), args.decimal_digits) << '\n';
    return 0;
  }
  Endpoint a = parse_endpoint(args.interval[0], base);
  Endpoint b = parse_endpoint(args.interval[1], base);
  if (a.exact && b.exact) {
    std::cout << value_line(interval_measure(*a.exact, *b.exact, dist), args.decimal_digits)
              << '\n';
    return 0;
  }
  MeasureEnclosure enclosure =
      interval_measure_enclosure(a.value, b.value, dist, args.depth);
  std::cout << "lower " << value_line(enclosure.lower, args.decimal_digits) << '\n';
  std::cout << "upper " << value_line(enclosure.upper, args.decimal_digits) << '\n';
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Exact weighted digit measures on [0,1], digit stream sources, and "
               "normality statistics"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint32_t base_value = 10;
  bool quiet = false;
  app.add_option("--base", base_value, "Digit alphabet size (default 10)")
      ->check(CLI::Range(static_cast<std::uint32_t>(Base::kMin), Base::kMax));
  app.add_flag("--quiet", quiet, "Suppress non-essential output");

  // measure
  MeasureArgs measure_args;
  auto* measure = app.add_subcommand(
      "measure", "Exact measure of an interval or a point under a digit distribution");
  measure->add_option("--dist", measure_args.dist_path, "Distribution file")->required();
  auto* interval_opt =
      measure
          ->add_option("--interval", measure_args.interval,
                       "Endpoints a b: rationals n/d or digit strings 0.<digits>")
          ->expected(2);
  auto* point_opt = measure->add_option("--point", measure_args.point,
                                        "Single point x (rational or 0.<digits>)");
  interval_opt->excludes(point_opt);
  measure->add_option("--decimal", measure_args.decimal_digits,
                      "Append a k-digit truncated decimal approximation (marked ~=)")
      ->check(CLI::Range(1u, 10000u));
  measure->add_option("--depth", measure_args.depth,
                      "Grid depth for the enclosure of non-terminating endpoints (default 24)")
      ->check(CLI::Range(1u, 1u << 20));

  // digits
  std::string digits_source;
  std::uint64_t digits_count = 0;
  auto* digits = app.add_subcommand("digits", "Emit digits from a source stream");
  digits->add_option("--source", digits_source,
                     "rational:<n/d> | sqrt:<m> | sample:<distfile>:<seed> | steinhaus:<a> | "
                     "file:<path>")
      ->required();
  digits->add_option("--count", digits_count, "Number of digits to emit")->required();

  // normality
  std::string norm_source;
  std::string norm_dist_path;
  std::uint64_t norm_n = 0;
  unsigned norm_maxk = 1;
  std::string norm_epsilon;
  auto* normality = app.add_subcommand(
      "normality", "Word-frequency report of a digit stream against a target distribution");
  normality->add_option("--source", norm_source, "Digit source (see digits)")->required();
  normality->add_option("--dist", norm_dist_path, "Target distribution file")->required();
  normality->add_option("--n", norm_n, "Window start positions to count")->required();
  normality->add_option("--maxk", norm_maxk, "Maximum word length K")->required();
  normality->add_option("--epsilon", norm_epsilon, "Deviation threshold (rational)")->required();

  // montecarlo
  std::string mc_dist_path;
  std::uint64_t mc_m = 0;
  std::uint64_t mc_n = 0;
  unsigned mc_maxk = 1;
  std::string mc_epsilon;
  std::string mc_seed;
  std::string mc_out;
  unsigned mc_threads = 0;
  auto* montecarlo = app.add_subcommand(
      "montecarlo", "Sample m sequences from a distribution and classify epsilon-normality");
  montecarlo->add_option("--dist", mc_dist_path, "Distribution file")->required();
  montecarlo->add_option("--m", mc_m, "Number of samples")->required();
  montecarlo->add_option("--n", mc_n, "Digits counted per sample")->required();
  montecarlo->add_option("--maxk", mc_maxk, "Maximum word length K")->required();
  montecarlo->add_option("--epsilon", mc_epsilon, "Deviation threshold (rational)")->required();
  montecarlo->add_option("--seed", mc_seed, "Campaign seed (64-bit unsigned)")->required();
  montecarlo->add_option("--out", mc_out, "Also write the result file here");
  montecarlo->add_option("--threads", mc_threads, "Worker threads (0 = hardware)");

  // demo
  std::string demo_dist_path;
  std::uint64_t demo_n = 0;
  unsigned demo_maxk = 1;
  std::string demo_epsilon;
  std::string demo_seed = "0";
  auto* demo = app.add_subcommand(
      "demo", "Number-level normality demonstration for a target distribution");
  demo->add_option("--dist", demo_dist_path, "Distribution file")->required();
  demo->add_option("--n", demo_n, "Window start positions to count")->required();
  demo->add_option("--maxk", demo_maxk, "Maximum word length K")->required();
  demo->add_option("--epsilon", demo_epsilon, "Deviation threshold (rational)")->required();
  demo->add_option("--seed", demo_seed, "Sample seed (case (b))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (measure->parsed()) {
      if (measure_args.interval.empty() && measure_args.point.empty()) {
        std::cerr << "measure: one of --interval or --point is required\n";
        return 2;
      }
      return run_measure(measure_args);
    }
    if (digits->parsed()) {
      auto stream = make_source(digits_source, Base(base_value));
      std::vector<digit_t> out = stream->take(digits_count);
      if (out.size() < digits_count) {
        fail(ErrorKind::StreamExhausted, "source produced " + std::to_string(out.size()) +
                                             " of " + std::to_string(digits_count) + " digits");
      }
      emit_digits(out, stream->base(), std::cout);
      return 0;
    }
    if (normality->parsed()) {
      DigitDistribution dist = load_distribution(norm_dist_path);
      auto stream = make_source(norm_source, dist.base());
      NormalityReport report = build_report(*stream, norm_n, norm_maxk, dist);
      EpsNormalVerdict verdict = is_eps_normal(report, Rational::parse(norm_epsilon));
      if (quiet) {
        for (unsigned k = 1; k <= report.max_len; ++k) {
          std::cout << "maxdev k=" << k << ' ' << report.max_deviation_by_length[k - 1].str()
                    << '\n';
        }
        std::cout << "eps-normal: " << (verdict.normal ? "yes" : "no");
        if (verdict.witness) std::cout << ' ' << verdict.witness->str();
        std::cout << '\n';
      } else {
        std::cout << format_report(report, &verdict);
      }
      return 0;
    }
    if (montecarlo->parsed()) {
      CampaignConfig config{load_distribution(mc_dist_path), mc_m,       mc_n,
                            mc_maxk,                         Rational::parse(mc_epsilon),
                            Seed{parse_seed(mc_seed)}};
      CampaignResult result = run_campaign(config, mc_threads);
      const std::string text = format_campaign_result(result);
      if (!mc_out.empty()) {
        std::ofstream out(mc_out, std::ios::binary);
        if (!out || !(out << text)) {
          fail(ErrorKind::IoError, "cannot write result file '" + mc_out + "'");
        }
      }
      if (quiet) {
        std::cout << "fraction: " << result.normal_count << '/' << config.samples << '\n';
      } else {
        std::cout << text;
      }
      return 0;
    }
    if (demo->parsed()) {
      DigitDistribution dist = load_distribution(demo_dist_path);
      DemoResult result = normal_number_demo(dist, demo_n, demo_maxk,
                                             Rational::parse(demo_epsilon),
                                             Seed{parse_seed(demo_seed)});
      std::cout << result.text;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace steinhaus
