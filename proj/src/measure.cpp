#include "steinhaus/measure.hpp"

#include <algorithm>

#include "steinhaus/errors.hpp"
#include "steinhaus/integer_math.hpp"

namespace steinhaus {

namespace {

void check_same_base(Base a, Base b, const char* what) {
  if (a != b) {
    fail(ErrorKind::BaseMismatch, std::string(what) + ": base " + std::to_string(a.value()) +
                                      " vs base " + std::to_string(b.value()));
  }
}

/// Cylinder {d_1} x ... x {d_{prefix_len}} x <last> x Omega...
PrefixCylinder prefix_then(Base base, const std::vector<digit_t>& digits, std::size_t prefix_len,
                           DigitSubset last) {
  std::vector<DigitSubset> cs;
  cs.reserve(prefix_len + 1);
  for (std::size_t i = 0; i < prefix_len; ++i) {
    cs.push_back(DigitSubset::singleton(base, digits[i]));
  }
  cs.push_back(std::move(last));
  return PrefixCylinder(base, std::move(cs));
}

PrefixCylinder singleton_prefix(Base base, const std::vector<digit_t>& digits, std::size_t len) {
  std::vector<DigitSubset> cs;
  cs.reserve(len);
  for (std::size_t i = 0; i < len; ++i) cs.push_back(DigitSubset::singleton(base, digits[i]));
  return PrefixCylinder(base, std::move(cs));
}

/// Mass of a's nines-tail preimage, the one sequence mapping onto a that no
/// decomposition cylinder contains. (Provably zero for 0 < a < 1 -- the tail
/// needs p_{b-1} = 1, forcing the decremented preperiod digit to carry mass
/// 0 -- but it is part of the measure identity, so it is computed, not
/// assumed.)
Rational lower_endpoint_nines_mass(const FiniteExpansion& a, const DigitDistribution& dist) {
  if (a.value().is_zero()) return 0;
  for (const ExpansionRep& rep : dual_representations(a.value(), a.base())) {
    if (rep.tail_kind() == TailKind::Nines) return representation_mass(rep, dist);
  }
  return 0;
}

}  // namespace

Rational representation_mass(const ExpansionRep& rep, const DigitDistribution& dist) {
  check_same_base(rep.preperiod.base(), dist.base(), "representation_mass");
  for (digit_t d : rep.period) {
    if (dist.probability(d) != Rational(1)) return 0;
  }
  Rational product = 1;
  for (digit_t d : rep.preperiod) {
    product *= dist.probability(d);
    if (product.is_zero()) break;
  }
  return product;
}

Rational point_measure(const Rational& x, const DigitDistribution& dist) {
  if (x.is_negative() || x > Rational(1)) {
    fail(ErrorKind::OutOfRange, "point_measure requires x in [0,1], got " + x.str());
  }
  // Without a unit-mass digit every infinite product of digit probabilities
  // vanishes, so no singleton carries mass; skip expanding x.
  if (!dist.unit_mass_digit()) return 0;
  Rational sum;
  for (const ExpansionRep& rep : dual_representations(x, dist.base())) {
    sum += representation_mass(rep, dist);
  }
  return sum;
}

IntervalDecomposition interval_to_cylinders(const FiniteExpansion& a, const FiniteExpansion& b) {
  check_same_base(a.base(), b.base(), "interval_to_cylinders");
  if (a.value() >= b.value()) {
    fail(ErrorKind::EmptyInterval,
         "interval requires a < b, got a = " + a.value().str() + ", b = " + b.value().str());
  }
  const Base base = a.base();
  IntervalDecomposition out;

  if (b.is_one()) {
    // Upper digits are conceptually all b-1; [a, 1] needs only the pieces
    // built from a's digits, and the point 1 = (b-1, b-1, ...) already lies
    // in one of them.
    const std::size_t n = std::max<std::size_t>(1, a.depth());
    const std::vector<digit_t> A = a.padded_digits(n);
    std::size_t n0 = 0;  // 1-based; 0 = no digit below b-1
    for (std::size_t j = 0; j < n; ++j) {
      if (A[j] != base.max_digit()) {
        n0 = j + 1;
        break;
      }
    }
    if (n0 != 0) {
      out.cylinders.push_back(
          prefix_then(base, A, n0 - 1, DigitSubset::greater_than(base, A[n0 - 1])));
      for (std::size_t k = n0 + 1; k <= n; ++k) {
        out.cylinders.push_back(
            prefix_then(base, A, k - 1, DigitSubset::greater_than(base, A[k - 1])));
      }
    }
    out.cylinders.push_back(singleton_prefix(base, A, n));
    return out;
  }

  const std::size_t n = std::max<std::size_t>({std::size_t{1}, a.depth(), b.depth()});
  const std::vector<digit_t> A = a.padded_digits(n);
  const std::vector<digit_t> B = b.padded_digits(n);
  std::size_t n0 = 1;
  while (A[n0 - 1] == B[n0 - 1]) ++n0;  // exists: a < b and equal length

  // middle
  out.cylinders.push_back(
      prefix_then(base, A, n0 - 1, DigitSubset::open_range(base, A[n0 - 1], B[n0 - 1])));
  // left staircase
  for (std::size_t k = n0 + 1; k <= n; ++k) {
    out.cylinders.push_back(
        prefix_then(base, A, k - 1, DigitSubset::greater_than(base, A[k - 1])));
  }
  // a-prefix
  out.cylinders.push_back(singleton_prefix(base, A, n));
  // right staircase
  for (std::size_t k = n0 + 1; k <= n; ++k) {
    out.cylinders.push_back(prefix_then(base, B, k - 1, DigitSubset::less_than(base, B[k - 1])));
  }
  // endpoint descriptor: b_1 ... b_n followed by zeros
  out.endpoint = ExpansionRep{DigitWord(base, B), DigitWord(base, {0})};
  return out;
}

Rational interval_measure(const FiniteExpansion& a, const FiniteExpansion& b,
                          const DigitDistribution& dist) {
  check_same_base(a.base(), b.base(), "interval_measure");
  check_same_base(a.base(), dist.base(), "interval_measure");
  const Rational av = a.value();
  const Rational bv = b.value();
  if (av > bv) {
    fail(ErrorKind::EmptyInterval,
         "interval requires a <= b, got a = " + av.str() + ", b = " + bv.str());
  }
  if (av == bv) return point_measure(av, dist);

  IntervalDecomposition decomposition = interval_to_cylinders(a, b);
  Rational total;
  for (const PrefixCylinder& cyl : decomposition.cylinders) {
    total += cylinder_measure(cyl, dist);
  }
  if (decomposition.endpoint) {
    total += representation_mass(*decomposition.endpoint, dist);
  }
  total += lower_endpoint_nines_mass(a, dist);
  return total;
}

Rational interval_measure_open(const FiniteExpansion& a, const FiniteExpansion& b,
                               const DigitDistribution& dist) {
  if (a.value() == b.value()) return 0;  // (a,a) is empty
  return interval_measure(a, b, dist) - point_measure(a.value(), dist) -
         point_measure(b.value(), dist);
}

Rational interval_measure_half_open(const FiniteExpansion& a, const FiniteExpansion& b,
                                    const DigitDistribution& dist, bool include_left) {
  if (a.value() == b.value()) return 0;  // [a,a) and (a,a] are empty
  const Rational excluded = include_left ? b.value() : a.value();
  return interval_measure(a, b, dist) - point_measure(excluded, dist);
}

MeasureEnclosure interval_measure_enclosure(const Rational& x, const Rational& y,
                                            const DigitDistribution& dist, unsigned depth) {
  if (x.is_negative() || y > Rational(1)) {
    fail(ErrorKind::OutOfRange, "enclosure requires 0 <= x <= y <= 1");
  }
  if (x > y) fail(ErrorKind::EmptyInterval, "enclosure requires x <= y");
  const Base base = dist.base();
  const Rational scale(ipow(Integer(base.value()), depth));

  auto grid_floor = [&](const Rational& v) {
    Integer k = (v * scale).numerator() / (v * scale).denominator();
    return FiniteExpansion::from_rational(Rational(k) / scale, base);
  };
  auto grid_ceil = [&](const Rational& v) {
    Rational scaled = v * scale;
    Integer k = scaled.numerator() / scaled.denominator();
    if (Rational(k) != scaled) k += 1;
    return FiniteExpansion::from_rational(Rational(k) / scale, base);
  };

  const FiniteExpansion outer_lo = grid_floor(x);
  const FiniteExpansion inner_lo = grid_ceil(x);
  const FiniteExpansion inner_hi = grid_floor(y);
  const FiniteExpansion outer_hi = grid_ceil(y);

  MeasureEnclosure out;
  if (inner_lo.value() <= inner_hi.value()) {
    out.lower = interval_measure(inner_lo, inner_hi, dist);
  }
  out.upper = interval_measure(outer_lo, outer_hi, dist);
  return out;
}

}  // namespace steinhaus
