#pragma once

#include <string>
#include <vector>

#include "steinhaus/alphabet.hpp"

namespace steinhaus {

/// Subset of the digit alphabet at one sequence position. The empty subset is
/// allowed (it shows up as {>a,<a+1} in interval decompositions) and carries
/// mass 0, which keeps the decomposition formula uniform.
class DigitSubset {
public:
  static DigitSubset empty(Base base);
  static DigitSubset full(Base base);
  static DigitSubset singleton(Base base, digit_t d);
  static DigitSubset greater_than(Base base, digit_t a);   // {x : x > a}
  static DigitSubset less_than(Base base, digit_t a);      // {x : x < a}
  static DigitSubset at_least(Base base, digit_t a);       // {x : x >= a}
  static DigitSubset at_most(Base base, digit_t a);        // {x : x <= a}
  static DigitSubset open_range(Base base, digit_t a, digit_t b);  // {x : a < x < b}

  Base base() const noexcept { return base_; }
  bool contains(digit_t d) const { return d < member_.size() && member_[d]; }
  std::size_t count() const;
  bool is_empty() const;
  bool is_full() const;
  bool intersects(const DigitSubset& other) const;

  /// Sum of the digit probabilities over the members.
  Rational mass(const DigitDistribution& dist) const;

  std::string str() const;  // e.g. "{2,3,5}", "{}", "Omega"

  bool operator==(const DigitSubset&) const = default;

private:
  DigitSubset(Base base, std::vector<bool> member)
      : base_(base), member_(std::move(member)) {}

  Base base_;
  std::vector<bool> member_;  // size b
};

/// Constraints on finitely many leading positions of a digit sequence;
/// position i (1-based) must fall in constraints()[i-1], later positions are
/// unconstrained. Canonical form: trailing full-alphabet constraints are
/// stripped, so equality and disjointness are syntactic.
class PrefixCylinder {
public:
  PrefixCylinder(Base base, std::vector<DigitSubset> constraints);

  /// The whole space (no constraints).
  static PrefixCylinder whole_space(Base base) { return PrefixCylinder(base, {}); }

  Base base() const noexcept { return base_; }
  const std::vector<DigitSubset>& constraints() const noexcept { return constraints_; }
  std::size_t depth() const noexcept { return constraints_.size(); }

  /// True when some constraint is the empty subset (the cylinder is the empty
  /// set of sequences).
  bool is_empty_set() const;

  /// Syntactic disjointness: empty cylinders are disjoint from everything;
  /// otherwise two prefix cylinders are disjoint iff some shared constrained
  /// position has disjoint subsets.
  bool disjoint_with(const PrefixCylinder& other) const;

  std::string str() const;

  bool operator==(const PrefixCylinder&) const = default;

private:
  Base base_;
  std::vector<DigitSubset> constraints_;
};

/// Product measure of a finitely-constrained cylinder: the product over the
/// constrained positions of the subset masses. The unconstrained tail
/// contributes factor 1.
Rational cylinder_measure(const PrefixCylinder& cyl, const DigitDistribution& dist);

}  // namespace steinhaus
