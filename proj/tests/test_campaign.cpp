#include <doctest.h>

#include <set>

#include "test_util.hpp"

using namespace steinhaus;
using test_util::rat;

TEST_CASE("sample seeds derive from the splitmix stream and are distinct") {
  const Seed base{42};
  SplitMix64 reference(base);
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 1; i <= 1000; ++i) {
    const Seed derived = derive_sample_seed(base, i);
    CHECK(derived.value == reference.next());
    seen.insert(derived.value);
  }
  CHECK(seen.size() == 1000);
}

TEST_CASE("degenerate campaign: every sample is forced and exactly normal") {
  CampaignConfig config{test_util::degenerate(Base(10), 9), 10, 1000, 2, rat("1/1000"),
                        Seed{7}};
  CampaignResult result = run_campaign(config);
  CHECK(result.normal_count == 10);
  CHECK(result.fraction() == Rational(1));
  REQUIRE(result.verdicts.size() == 10);
  for (std::size_t i = 0; i < result.verdicts.size(); ++i) {
    CHECK(result.verdicts[i].index == i + 1);
    CHECK(result.verdicts[i].eps_normal);
    CHECK(result.verdicts[i].max_deviation == Rational(0));
    CHECK(result.verdicts[i].seed == derive_sample_seed(config.seed, i + 1));
  }
}

TEST_CASE("campaign reproducibility across runs and thread counts") {
  SplitMix64 gen(Seed{131});
  CampaignConfig config{test_util::random_distribution(Base(10), gen), 12, 400, 2, rat("1/10"),
                        Seed{99}};
  CampaignResult a = run_campaign(config, 1);
  CampaignResult b = run_campaign(config, 4);
  CampaignResult c = run_campaign(config);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(format_campaign_result(a) == format_campaign_result(b));
}

TEST_CASE("uniform campaign at a comfortable epsilon") {
  CampaignConfig config{uniform_distribution(Base(10)), 20, 10000, 1, rat("1/50"), Seed{7}};
  CampaignResult result = run_campaign(config);
  CHECK(result.fraction() == Rational(1));
}

TEST_CASE("campaign result serialization round trip") {
  SplitMix64 gen(Seed{137});
  CampaignConfig config{test_util::random_distribution(Base(3), gen), 5, 200, 2, rat("1/8"),
                        Seed{12345}};
  CampaignResult result = run_campaign(config);
  const std::string text = format_campaign_result(result);
  CampaignResult parsed = parse_campaign_result(text);
  CHECK(parsed == result);
  CHECK(parsed.fraction() == result.fraction());

  CHECK(text.find("montecarlo v1\n") == 0);
  CHECK(text.find("fraction: " + std::to_string(result.normal_count) + "/5\n") !=
        std::string::npos);
}

TEST_CASE("campaign result parser rejects corrupted input") {
  CampaignConfig config{uniform_distribution(Base(2)), 2, 50, 1, rat("1/4"), Seed{5}};
  const std::string text = format_campaign_result(run_campaign(config));

  CHECK_KIND(parse_campaign_result("bogus v1\n"), ErrorKind::ParseError);
  CHECK_KIND(parse_campaign_result(text.substr(0, text.size() / 2)), ErrorKind::ParseError);

  // tampered verdict must break the fraction cross-check
  std::string tampered = text;
  auto pos = tampered.find("normal yes");
  if (pos == std::string::npos) {
    pos = tampered.find("normal no");
    tampered.replace(pos, 9, "normal yes");
  } else {
    tampered.replace(pos, 10, "normal no ");
  }
  CHECK_KIND(parse_campaign_result(tampered), ErrorKind::ParseError);
}

TEST_CASE("campaign config validation") {
  DigitDistribution uniform = uniform_distribution(Base(10));
  CHECK_KIND(run_campaign(CampaignConfig{uniform, 0, 10, 1, rat("1/2"), Seed{}}),
             ErrorKind::InvalidArgument);
  CHECK_KIND(run_campaign(CampaignConfig{uniform, 1, 0, 1, rat("1/2"), Seed{}}),
             ErrorKind::InvalidArgument);
  CHECK_KIND(run_campaign(CampaignConfig{uniform, 1, 10, 0, rat("1/2"), Seed{}}),
             ErrorKind::InvalidArgument);
  CHECK_KIND(run_campaign(CampaignConfig{uniform, 1, 10, 1, Rational(0), Seed{}}),
             ErrorKind::InvalidArgument);
}

TEST_CASE("normal number demo: both theorem cases") {
  Base b10(10);

  DemoResult case_b = normal_number_demo(uniform_distribution(b10), 20000, 2, rat("1/100"),
                                         Seed{42});
  CHECK(case_b.case_label == 'b');
  REQUIRE(case_b.sample_eps_normal.has_value());
  CHECK(*case_b.sample_eps_normal);
  CHECK(case_b.text.find("case (b)") != std::string::npos);
  CHECK(case_b.text.find("sample-eps-normal: yes") != std::string::npos);

  DemoResult case_a = normal_number_demo(test_util::degenerate(b10, 9), 100, 1, rat("1/10"));
  CHECK(case_a.case_label == 'a');
  CHECK(!case_a.sample_eps_normal.has_value());
  CHECK(case_a.text.find("case (a)") != std::string::npos);
  CHECK(case_a.text.find("measure 0") != std::string::npos);

  // probability 1 on digit 0 is still case (b): the sampled number is 0,
  // whose canonical digits are all zeros, a perfect match for its target
  DemoResult zeros = normal_number_demo(test_util::degenerate(b10, 0), 500, 1, rat("1/100"));
  CHECK(zeros.case_label == 'b');
  REQUIRE(zeros.sample_eps_normal.has_value());
  CHECK(*zeros.sample_eps_normal);
}
