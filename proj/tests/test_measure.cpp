#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"

using namespace steinhaus;
using test_util::rat;
using test_util::word;

namespace {

FiniteExpansion fe(const char* digits, Base base) {
  return FiniteExpansion::from_word(test_util::word(digits, base));
}

/// A full depth-d prefix is either contained in a piece or disjoint from it.
bool prefix_in_cylinder(const std::vector<digit_t>& prefix, const PrefixCylinder& piece) {
  if (piece.depth() > prefix.size()) return false;  // not possible in these tests
  for (std::size_t i = 0; i < piece.depth(); ++i) {
    if (!piece.constraints()[i].contains(prefix[i])) return false;
  }
  return true;
}

/// Exhaustive check of the decomposition at depth d > n: a depth-d prefix is
/// covered by exactly one cylinder iff its image lies inside [a,b], and by
/// none otherwise.
void check_cover(const FiniteExpansion& a, const FiniteExpansion& b, unsigned depth) {
  const Base base = a.base();
  IntervalDecomposition decomposition = interval_to_cylinders(a, b);

  // pairwise disjoint
  for (std::size_t i = 0; i < decomposition.cylinders.size(); ++i) {
    for (std::size_t j = i + 1; j < decomposition.cylinders.size(); ++j) {
      CHECK(decomposition.cylinders[i].disjoint_with(decomposition.cylinders[j]));
    }
  }

  const Rational unit(Integer(1), ipow(Integer(base.value()), depth));
  const Rational av = a.value();
  const Rational bv = b.value();
  std::vector<digit_t> prefix(depth, 0);
  Rational lo;
  for (;;) {
    int covering = 0;
    for (const PrefixCylinder& piece : decomposition.cylinders) {
      if (piece.is_empty_set()) continue;
      if (prefix_in_cylinder(prefix, piece)) ++covering;
    }
    const bool inside = av <= lo && lo + unit <= bv;
    CHECK(covering == (inside ? 1 : 0));

    lo += unit;
    unsigned i = depth;
    while (i > 0 && prefix[i - 1] == base.max_digit()) prefix[--i] = 0;
    if (i == 0) break;
    ++prefix[i - 1];
  }

  if (decomposition.endpoint) {
    CHECK(decomposition.endpoint->value() == bv);
    CHECK(decomposition.endpoint->tail_kind() == TailKind::Zeros);
  } else {
    CHECK(b.is_one());
  }
}

}  // namespace

TEST_CASE("interval_to_cylinders: single-digit endpoints") {
  Base b10(10);
  auto d = interval_to_cylinders(fe("1", b10), fe("3", b10));
  REQUIRE(d.cylinders.size() == 2);
  CHECK(d.cylinders[0] == PrefixCylinder(b10, {DigitSubset::open_range(b10, 1, 3)}));
  CHECK(d.cylinders[1] == PrefixCylinder(b10, {DigitSubset::singleton(b10, 1)}));
  REQUIRE(d.endpoint.has_value());
  CHECK(d.endpoint->preperiod == word("3", b10));
  CHECK(d.endpoint->value() == rat("3/10"));
}

TEST_CASE("interval_to_cylinders: shared first digit") {
  Base b10(10);
  auto d = interval_to_cylinders(fe("10", b10), fe("12", b10));
  // staircases run over k in n0+1..n, an empty range here (n0 = n = 2)
  REQUIRE(d.cylinders.size() == 2);
  // middle {1}x{1}
  CHECK(d.cylinders[0] ==
        PrefixCylinder(b10, {DigitSubset::singleton(b10, 1), DigitSubset::open_range(b10, 0, 2)}));
  CHECK(d.cylinders[0].constraints()[1] == DigitSubset::singleton(b10, 1));
  // a-prefix {1}x{0}
  CHECK(d.cylinders[1] ==
        PrefixCylinder(b10, {DigitSubset::singleton(b10, 1), DigitSubset::singleton(b10, 0)}));
  REQUIRE(d.endpoint.has_value());
  CHECK(d.endpoint->preperiod == word("12", b10));
}

TEST_CASE("interval_to_cylinders: base 2 [0, 1/2]") {
  Base b2(2);
  auto d = interval_to_cylinders(fe("0", b2), fe("1", b2));
  REQUIRE(d.cylinders.size() == 2);
  CHECK(d.cylinders[0].is_empty_set());  // middle {>0,<1}
  CHECK(d.cylinders[1] == PrefixCylinder(b2, {DigitSubset::singleton(b2, 0)}));
  REQUIRE(d.endpoint.has_value());
  CHECK(d.endpoint->value() == rat("1/2"));

  DigitDistribution uniform = uniform_distribution(b2);
  Rational total;
  for (const auto& c : d.cylinders) total += cylinder_measure(c, uniform);
  CHECK(total == rat("1/2"));
  CHECK(representation_mass(*d.endpoint, uniform) == Rational(0));
}

TEST_CASE("interval_to_cylinders: upper endpoint 1 needs no descriptor") {
  Base b10(10);
  auto d = interval_to_cylinders(fe("9", b10), FiniteExpansion::one(b10));
  CHECK(!d.endpoint.has_value());
  REQUIRE(d.cylinders.size() == 1);
  CHECK(d.cylinders[0] == PrefixCylinder(b10, {DigitSubset::singleton(b10, 9)}));
}

TEST_CASE("interval_to_cylinders rejects bad input") {
  Base b10(10);
  CHECK_KIND(interval_to_cylinders(fe("3", b10), fe("3", b10)), ErrorKind::EmptyInterval);
  CHECK_KIND(interval_to_cylinders(fe("5", b10), fe("3", b10)), ErrorKind::EmptyInterval);
  CHECK_KIND(interval_to_cylinders(fe("1", b10), fe("1", Base(2))), ErrorKind::BaseMismatch);
}

TEST_CASE("decomposition covers exactly the inside prefixes") {
  // hand-picked cases including boundary digits and the endpoint 1
  check_cover(fe("1", Base(10)), fe("3", Base(10)), 2);
  check_cover(fe("10", Base(10)), fe("12", Base(10)), 3);
  check_cover(fe("19", Base(10)), fe("3", Base(10)), 3);
  check_cover(fe("1", Base(10)), fe("25", Base(10)), 3);
  check_cover(fe("0", Base(2)), fe("1", Base(2)), 2);
  check_cover(fe("011", Base(2)), fe("11", Base(2)), 4);
  check_cover(fe("2", Base(3)), FiniteExpansion::one(Base(3)), 3);
  check_cover(fe("22", Base(3)), FiniteExpansion::one(Base(3)), 3);
  check_cover(fe("0", Base(10)), FiniteExpansion::one(Base(10)), 2);
  check_cover(fe("99", Base(10)), FiniteExpansion::one(Base(10)), 3);

  // randomized
  SplitMix64 gen(Seed{31});
  for (std::uint32_t bv : {2u, 3u, 5u}) {
    Base base(bv);
    for (int trial = 0; trial < 20; ++trial) {
      FiniteExpansion x = test_util::random_expansion(base, 3, gen);
      FiniteExpansion y = test_util::random_expansion(base, 3, gen);
      if (uniform_below(gen, 4) == 0) y = FiniteExpansion::one(base);
      if (x.value() == y.value()) continue;
      const FiniteExpansion& lo = x.value() < y.value() ? x : y;
      const FiniteExpansion& hi = x.value() < y.value() ? y : x;
      check_cover(lo, hi, 4);
    }
  }
}

TEST_CASE("point_measure") {
  Base b10(10);
  DigitDistribution uniform = uniform_distribution(b10);
  CHECK(point_measure(rat("1/2"), uniform) == Rational(0));
  CHECK(point_measure(rat("1/3"), uniform) == Rational(0));
  CHECK(point_measure(Rational(0), uniform) == Rational(0));
  CHECK(point_measure(Rational(1), uniform) == Rational(0));

  DigitDistribution nine = test_util::degenerate(b10, 9);
  CHECK(point_measure(Rational(1), nine) == Rational(1));
  CHECK(point_measure(rat("9/10"), nine) == Rational(0));

  DigitDistribution zero = test_util::degenerate(b10, 0);
  CHECK(point_measure(rat("1/2"), zero) == Rational(0));
  CHECK(point_measure(Rational(0), zero) == Rational(1));
  CHECK(point_measure(Rational(1), zero) == Rational(0));

  CHECK_KIND(point_measure(rat("3/2"), uniform), ErrorKind::OutOfRange);
}

TEST_CASE("interval_measure: weighted example and complement") {
  Base b10(10);
  DigitDistribution weighted = test_util::weighted_nines();
  CHECK(interval_measure(fe("9", b10), FiniteExpansion::one(b10), weighted) == rat("3/10"));
  CHECK(interval_measure(fe("0", b10), fe("9", b10), weighted) == rat("7/10"));

  DigitDistribution uniform = uniform_distribution(b10);
  CHECK(interval_measure(fe("1", b10), fe("3", b10), uniform) == rat("1/5"));
}

TEST_CASE("interval_measure coincides with length for the uniform target") {
  SplitMix64 gen(Seed{41});
  for (std::uint32_t bv : {2u, 3u, 10u}) {
    Base base(bv);
    DigitDistribution uniform = uniform_distribution(base);
    for (int trial = 0; trial < 40; ++trial) {
      FiniteExpansion x = test_util::random_expansion(base, 6, gen);
      FiniteExpansion y = test_util::random_expansion(base, 6, gen);
      if (uniform_below(gen, 5) == 0) y = FiniteExpansion::one(base);
      if (x.value() == y.value()) continue;
      const FiniteExpansion& lo = x.value() < y.value() ? x : y;
      const FiniteExpansion& hi = x.value() < y.value() ? y : x;
      CHECK(interval_measure(lo, hi, uniform) == hi.value() - lo.value());
    }
  }
}

TEST_CASE("interval_measure properties: additivity, normalization, monotonicity") {
  SplitMix64 gen(Seed{43});
  Base b10(10);
  std::vector<DigitDistribution> dists = {
      uniform_distribution(b10),
      test_util::weighted_nines(),
      test_util::degenerate(b10, 0),
      test_util::degenerate(b10, 9),
      test_util::random_distribution(b10, gen),
  };
  const FiniteExpansion zero = FiniteExpansion::zero(b10);
  const FiniteExpansion one = FiniteExpansion::one(b10);
  for (const auto& dist : dists) {
    CHECK(interval_measure(zero, one, dist) == Rational(1));
    for (int trial = 0; trial < 20; ++trial) {
      FiniteExpansion e1 = test_util::random_expansion(b10, 5, gen);
      FiniteExpansion e2 = test_util::random_expansion(b10, 5, gen);
      FiniteExpansion e3 = test_util::random_expansion(b10, 5, gen);
      std::vector<FiniteExpansion> sorted = {e1, e2, e3};
      std::sort(sorted.begin(), sorted.end());
      const auto& a = sorted[0];
      const auto& m = sorted[1];
      const auto& b = sorted[2];
      if (a.value() == m.value() || m.value() == b.value()) continue;

      CHECK(interval_measure(a, b, dist) ==
            interval_measure(a, m, dist) + interval_measure(m, b, dist) -
                point_measure(m.value(), dist));
      // monotonicity: [m,b] inside [a,b]
      CHECK(interval_measure(m, b, dist) <= interval_measure(a, b, dist));
    }
  }
}

TEST_CASE("interval_measure degenerates to point_measure at a == b") {
  Base b10(10);
  DigitDistribution nine = test_util::degenerate(b10, 9);
  CHECK(interval_measure(FiniteExpansion::one(b10), FiniteExpansion::one(b10), nine) ==
        Rational(1));
  CHECK(interval_measure(fe("5", b10), fe("50", b10), nine) == Rational(0));
  CHECK_KIND(interval_measure(fe("6", b10), fe("5", b10), nine), ErrorKind::EmptyInterval);
}

TEST_CASE("interval_measure against the brute-force sandwich") {
  Base b3(3);
  std::vector<DigitDistribution> dists = {
      uniform_distribution(b3),
      make_distribution(b3, {rat("1/2"), rat("1/3"), rat("1/6")}),
      test_util::degenerate(b3, 0),
  };
  for (const auto& dist : dists) {
    test_util::PrefixGrid grid(dist, 4);
    std::vector<FiniteExpansion> endpoints;
    for (int k = 0; k < 9; ++k) {
      endpoints.push_back(
          FiniteExpansion::from_rational(Rational(k, 9), b3));  // depth <= 2 grid
    }
    endpoints.push_back(FiniteExpansion::one(b3));
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
      for (std::size_t j = i + 1; j < endpoints.size(); ++j) {
        const Rational exact = interval_measure(endpoints[i], endpoints[j], dist);
        const auto sandwich = grid.classify(endpoints[i].value(), endpoints[j].value());
        CHECK(sandwich.inside <= exact);
        CHECK(exact <= sandwich.inside + sandwich.straddle);
        if (sandwich.straddle.is_zero()) CHECK(exact == sandwich.inside);
      }
    }
  }
}

TEST_CASE("unit mass on an interior digit concentrates at 5/9") {
  Base b10(10);
  DigitDistribution five = test_util::degenerate(b10, 5);
  // the only sequence with mass is 5,5,5,... whose value is 0.555... = 5/9
  CHECK(point_measure(rat("5/9"), five) == Rational(1));
  CHECK(point_measure(rat("1/18"), five) == Rational(0));  // 0.0555... needs digit 0 first

  auto interval = [&](const char* lo, const char* hi) {
    return interval_measure(fe(lo, b10), fe(hi, b10), five);
  };
  CHECK(interval("5", "6") == Rational(1));    // [0.5, 0.6] contains 5/9
  CHECK(interval("55", "56") == Rational(1));  // [0.55, 0.56] contains 5/9
  CHECK(interval("0", "5") == Rational(0));    // 5/9 > 0.5
  CHECK(interval("56", "9") == Rational(0));   // 5/9 < 0.56
  CHECK(interval_measure(fe("6", b10), FiniteExpansion::one(b10), five) == Rational(0));
  CHECK(interval_measure(fe("5", b10), FiniteExpansion::one(b10), five) == Rational(1));

  // sharp additivity across the boundary 0.5
  CHECK(interval("0", "5") + interval("5", "6") - point_measure(rat("1/2"), five) ==
        interval("0", "6"));
}

TEST_CASE("open and half-open variants subtract endpoint masses") {
  Base b10(10);
  DigitDistribution nine = test_util::degenerate(b10, 9);
  const FiniteExpansion point_nine = fe("9", b10);
  const FiniteExpansion one = FiniteExpansion::one(b10);
  CHECK(interval_measure(point_nine, one, nine) == Rational(1));
  CHECK(interval_measure_half_open(point_nine, one, nine, true) == Rational(0));   // [0.9, 1)
  CHECK(interval_measure_half_open(point_nine, one, nine, false) == Rational(1));  // (0.9, 1]
  CHECK(interval_measure_open(point_nine, one, nine) == Rational(0));
  CHECK(interval_measure_open(point_nine, point_nine, nine) == Rational(0));

  DigitDistribution uniform = uniform_distribution(b10);
  CHECK(interval_measure_open(fe("1", b10), fe("3", b10), uniform) == rat("1/5"));
}

TEST_CASE("measure enclosure for non-terminating endpoints") {
  Base b10(10);
  DigitDistribution uniform = uniform_distribution(b10);

  auto enclosure = interval_measure_enclosure(rat("1/3"), rat("1/2"), uniform, 6);
  CHECK(enclosure.lower <= rat("1/6"));
  CHECK(rat("1/6") <= enclosure.upper);
  CHECK(enclosure.upper - enclosure.lower <= rat("4/1000000"));

  // exact endpoints collapse the enclosure
  auto tight = interval_measure_enclosure(rat("1/10"), rat("3/10"), uniform, 4);
  CHECK(tight.lower == rat("1/5"));
  CHECK(tight.upper == rat("1/5"));

  // gap bounded by the two trimmed depth-n cylinders
  SplitMix64 gen(Seed{53});
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t den = 2 + uniform_below(gen, 120);
    const std::uint64_t num1 = uniform_below(gen, den);
    const std::uint64_t num2 = uniform_below(gen, den + 1);
    Rational x(Integer(static_cast<unsigned long>(std::min(num1, num2))),
               Integer(static_cast<unsigned long>(den)));
    Rational y(Integer(static_cast<unsigned long>(std::max(num1, num2))),
               Integer(static_cast<unsigned long>(den)));
    auto e = interval_measure_enclosure(x, y, uniform, 5);
    CHECK(e.lower <= e.upper);
    CHECK(e.upper - e.lower <= rat("4/100000"));
  }

  CHECK_KIND(interval_measure_enclosure(rat("1/2"), rat("1/3"), uniform, 4),
             ErrorKind::EmptyInterval);
}
