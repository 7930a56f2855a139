#include <doctest.h>

#include "test_util.hpp"

using namespace steinhaus;
using test_util::rat;

TEST_CASE("digit subset constructors") {
  Base b10(10);
  CHECK(DigitSubset::greater_than(b10, 8) == DigitSubset::singleton(b10, 9));
  CHECK(DigitSubset::less_than(b10, 0).is_empty());
  CHECK(DigitSubset::open_range(b10, 0, 2) == DigitSubset::singleton(b10, 1));
  CHECK(DigitSubset::open_range(b10, 3, 4).is_empty());
  CHECK(DigitSubset::full(b10).count() == 10);
  CHECK(DigitSubset::at_least(b10, 7).count() == 3);
  CHECK(DigitSubset::at_most(b10, 2).count() == 3);
  CHECK(DigitSubset::greater_than(b10, 9).is_empty());
  CHECK(DigitSubset::full(b10).str() == "Omega");
  CHECK(DigitSubset::open_range(b10, 0, 3).str() == "{1,2}");
  CHECK_KIND(DigitSubset::singleton(b10, 10), ErrorKind::InvalidDigit);
}

TEST_CASE("subset mass") {
  Base b10(10);
  DigitDistribution uniform = uniform_distribution(b10);
  CHECK(DigitSubset::open_range(b10, 0, 4).mass(uniform) == rat("3/10"));
  CHECK(DigitSubset::empty(b10).mass(uniform) == Rational(0));
  CHECK(DigitSubset::full(b10).mass(uniform) == Rational(1));
  DigitDistribution weighted = test_util::weighted_nines();
  CHECK(DigitSubset::at_least(b10, 9).mass(weighted) == rat("3/10"));
  CHECK(DigitSubset::less_than(b10, 9).mass(weighted) == rat("7/10"));
  CHECK_KIND(DigitSubset::full(b10).mass(uniform_distribution(Base(2))),
             ErrorKind::BaseMismatch);
}

TEST_CASE("cylinder canonical form strips trailing full constraints") {
  Base b10(10);
  PrefixCylinder c(b10, {DigitSubset::full(b10), DigitSubset::singleton(b10, 3),
                         DigitSubset::full(b10), DigitSubset::full(b10)});
  CHECK(c.depth() == 2);  // leading Omega stays, trailing stripped
  CHECK(c == PrefixCylinder(b10, {DigitSubset::full(b10), DigitSubset::singleton(b10, 3)}));
  CHECK(PrefixCylinder::whole_space(b10).depth() == 0);
  CHECK_KIND(PrefixCylinder(b10, {DigitSubset::full(Base(2))}), ErrorKind::BaseMismatch);
}

TEST_CASE("cylinder_measure") {
  Base b10(10);
  DigitDistribution uniform = uniform_distribution(b10);
  DigitDistribution weighted = test_util::weighted_nines();

  // constraint at position 2 only
  PrefixCylinder pos2(b10, {DigitSubset::full(b10), DigitSubset::singleton(b10, 3)});
  CHECK(cylinder_measure(pos2, uniform) == rat("1/10"));

  PrefixCylinder nine_first(b10, {DigitSubset::singleton(b10, 9)});
  CHECK(cylinder_measure(nine_first, weighted) == rat("3/10"));

  PrefixCylinder one_two(b10, {DigitSubset::singleton(b10, 1), DigitSubset::singleton(b10, 2)});
  CHECK(cylinder_measure(one_two, uniform) == rat("1/100"));

  PrefixCylinder with_empty(b10, {DigitSubset::singleton(b10, 1), DigitSubset::empty(b10)});
  CHECK(cylinder_measure(with_empty, uniform) == Rational(0));

  CHECK(cylinder_measure(PrefixCylinder::whole_space(b10), weighted) == Rational(1));
  CHECK_KIND(cylinder_measure(pos2, uniform_distribution(Base(2))), ErrorKind::BaseMismatch);
}

TEST_CASE("syntactic disjointness") {
  Base b10(10);
  PrefixCylinder a(b10, {DigitSubset::singleton(b10, 1)});
  PrefixCylinder b(b10, {DigitSubset::singleton(b10, 2)});
  PrefixCylinder c(b10, {DigitSubset::at_least(b10, 2)});
  PrefixCylinder deep(b10, {DigitSubset::singleton(b10, 1), DigitSubset::singleton(b10, 5)});
  PrefixCylinder empty_cyl(b10, {DigitSubset::empty(b10)});

  CHECK(a.disjoint_with(b));
  CHECK(b.disjoint_with(a));
  CHECK(!b.disjoint_with(c));
  CHECK(a.disjoint_with(c));
  CHECK(!a.disjoint_with(deep));  // deep refines a
  CHECK(empty_cyl.disjoint_with(a));
  CHECK(empty_cyl.disjoint_with(PrefixCylinder::whole_space(b10)));
  CHECK(!PrefixCylinder::whole_space(b10).disjoint_with(a));
}
