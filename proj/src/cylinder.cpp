#include "steinhaus/cylinder.hpp"

#include <algorithm>

#include "steinhaus/errors.hpp"

namespace steinhaus {

namespace {

void check_digit(Base base, digit_t d) {
  if (!base.contains(d)) {
    fail(ErrorKind::InvalidDigit,
         "digit " + std::to_string(d) + " invalid for base " + std::to_string(base.value()));
  }
}

}  // namespace

DigitSubset DigitSubset::empty(Base base) {
  return DigitSubset(base, std::vector<bool>(base.value(), false));
}

DigitSubset DigitSubset::full(Base base) {
  return DigitSubset(base, std::vector<bool>(base.value(), true));
}

DigitSubset DigitSubset::singleton(Base base, digit_t d) {
  check_digit(base, d);
  std::vector<bool> m(base.value(), false);
  m[d] = true;
  return DigitSubset(base, std::move(m));
}

DigitSubset DigitSubset::greater_than(Base base, digit_t a) {
  check_digit(base, a);
  std::vector<bool> m(base.value(), false);
  for (digit_t d = a + 1; d < base.value(); ++d) m[d] = true;
  return DigitSubset(base, std::move(m));
}

DigitSubset DigitSubset::less_than(Base base, digit_t a) {
  check_digit(base, a);
  std::vector<bool> m(base.value(), false);
  for (digit_t d = 0; d < a; ++d) m[d] = true;
  return DigitSubset(base, std::move(m));
}

DigitSubset DigitSubset::at_least(Base base, digit_t a) {
  check_digit(base, a);
  std::vector<bool> m(base.value(), false);
  for (digit_t d = a; d < base.value(); ++d) m[d] = true;
  return DigitSubset(base, std::move(m));
}

DigitSubset DigitSubset::at_most(Base base, digit_t a) {
  check_digit(base, a);
  std::vector<bool> m(base.value(), false);
  for (digit_t d = 0; d <= a; ++d) m[d] = true;
  return DigitSubset(base, std::move(m));
}

DigitSubset DigitSubset::open_range(Base base, digit_t a, digit_t b) {
  check_digit(base, a);
  check_digit(base, b);
  std::vector<bool> m(base.value(), false);
  for (digit_t d = a + 1; d < b; ++d) m[d] = true;
  return DigitSubset(base, std::move(m));
}

std::size_t DigitSubset::count() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

bool DigitSubset::is_empty() const {
  return std::none_of(member_.begin(), member_.end(), [](bool x) { return x; });
}

bool DigitSubset::is_full() const {
  return std::all_of(member_.begin(), member_.end(), [](bool x) { return x; });
}

bool DigitSubset::intersects(const DigitSubset& other) const {
  if (base_ != other.base_) {
    fail(ErrorKind::BaseMismatch, "intersecting subsets over different bases");
  }
  for (std::size_t d = 0; d < member_.size(); ++d) {
    if (member_[d] && other.member_[d]) return true;
  }
  return false;
}

Rational DigitSubset::mass(const DigitDistribution& dist) const {
  if (dist.base() != base_) {
    fail(ErrorKind::BaseMismatch, "subset base " + std::to_string(base_.value()) +
                                      " vs distribution base " +
                                      std::to_string(dist.base().value()));
  }
  Rational sum;
  for (digit_t d = 0; d < base_.value(); ++d) {
    if (member_[d]) sum += dist.probability(d);
  }
  return sum;
}

std::string DigitSubset::str() const {
  if (is_full()) return "Omega";
  std::string out = "{";
  bool first = true;
  for (digit_t d = 0; d < base_.value(); ++d) {
    if (!member_[d]) continue;
    if (!first) out += ',';
    out += std::to_string(d);
    first = false;
  }
  out += '}';
  return out;
}

PrefixCylinder::PrefixCylinder(Base base, std::vector<DigitSubset> constraints)
    : base_(base), constraints_(std::move(constraints)) {
  for (const DigitSubset& s : constraints_) {
    if (s.base() != base_) {
      fail(ErrorKind::BaseMismatch, "cylinder constraints over mixed bases");
    }
  }
  while (!constraints_.empty() && constraints_.back().is_full()) constraints_.pop_back();
}

bool PrefixCylinder::is_empty_set() const {
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [](const DigitSubset& s) { return s.is_empty(); });
}

bool PrefixCylinder::disjoint_with(const PrefixCylinder& other) const {
  if (base_ != other.base_) {
    fail(ErrorKind::BaseMismatch, "cylinders over different bases");
  }
  if (is_empty_set() || other.is_empty_set()) return true;
  std::size_t shared = std::min(depth(), other.depth());
  for (std::size_t i = 0; i < shared; ++i) {
    if (!constraints_[i].intersects(other.constraints_[i])) return true;
  }
  return false;
}

std::string PrefixCylinder::str() const {
  std::string out;
  for (const DigitSubset& s : constraints_) {
    out += s.str();
    out += 'x';
  }
  out += "Omega^inf";
  return out;
}

Rational cylinder_measure(const PrefixCylinder& cyl, const DigitDistribution& dist) {
  if (cyl.base() != dist.base()) {
    fail(ErrorKind::BaseMismatch, "cylinder base " + std::to_string(cyl.base().value()) +
                                      " vs distribution base " +
                                      std::to_string(dist.base().value()));
  }
  Rational product = 1;
  for (const DigitSubset& s : cyl.constraints()) {
    product *= s.mass(dist);
    if (product.is_zero()) break;
  }
  return product;
}

}  // namespace steinhaus
