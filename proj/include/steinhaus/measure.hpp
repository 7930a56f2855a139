#pragma once

#include <optional>
#include <vector>

#include "steinhaus/cylinder.hpp"
#include "steinhaus/expansion.hpp"

namespace steinhaus {

/// Mass of a single infinite digit sequence under the product measure: the
/// product of the digit probabilities over all positions. For an eventually
/// periodic sequence this is decidable: the infinite tail contributes 1 when
/// every period digit has probability exactly 1, and 0 otherwise, so the mass
/// is the preperiod product in the first case and 0 in the second.
Rational representation_mass(const ExpansionRep& rep, const DigitDistribution& dist);

/// Pushforward measure of the singleton {x}: the summed mass of the one or
/// two digit sequences evaluating to x. Nonzero only for degenerate
/// distributions (some digit with probability 1).
Rational point_measure(const Rational& x, const DigitDistribution& dist);

/// Disjoint cylinder decomposition of a closed interval [a,b] with finite
/// expansion endpoints, padded to a common depth n with first differing
/// index n0:
///
///   middle          {a_1} x..x {a_{n0-1}} x {>a_n0,<b_n0} x Omega...
///   left staircase  {a_1} x..x {a_{k-1}}  x {>a_k}        x Omega...   n0 < k <= n
///   a-prefix        {a_1} x..x {a_n}                      x Omega...
///   right staircase {b_1} x..x {b_{k-1}}  x {<b_k}        x Omega...   n0 < k <= n
///
/// plus the endpoint descriptor (b_1..b_n followed by zeros) covering the
/// point b itself, which is not inside any cylinder. For b = 1 the upper
/// digits are all b-1 and the decomposition needs no right staircase and no
/// endpoint descriptor (the all-(b-1)s sequence already lies in a cylinder).
///
/// The cylinders are pairwise disjoint as sets of sequences; the union of
/// their images together with b equals [a,b] up to a countable set.
struct IntervalDecomposition {
  std::vector<PrefixCylinder> cylinders;
  std::optional<ExpansionRep> endpoint;
};

/// EmptyInterval unless a < b; BaseMismatch unless bases agree.
IntervalDecomposition interval_to_cylinders(const FiniteExpansion& a, const FiniteExpansion& b);

/// Exact pushforward measure of the closed interval [a,b]: the cylinder
/// masses of the decomposition, plus the endpoint descriptor's mass, plus the
/// mass of a's nines-tail representation (the one preimage of a outside every
/// cylinder). a = b degenerates to point_measure.
Rational interval_measure(const FiniteExpansion& a, const FiniteExpansion& b,
                          const DigitDistribution& dist);

/// Exact measures of the open/half-open variants: the closed measure minus
/// the point masses of the excluded endpoints.
Rational interval_measure_open(const FiniteExpansion& a, const FiniteExpansion& b,
                               const DigitDistribution& dist);
Rational interval_measure_half_open(const FiniteExpansion& a, const FiniteExpansion& b,
                                    const DigitDistribution& dist, bool include_left);

/// Two-sided enclosure of the measure of [x,y] for arbitrary rational
/// endpoints: both endpoints are truncated to the depth-n grid, the inner
/// (outer) grid interval gives the lower (upper) bound. The gap is at most
/// the measure of the two trimmed depth-n cylinders. For endpoints that are
/// exactly depth-n expansions the enclosure is tight on both sides.
struct MeasureEnclosure {
  Rational lower;
  Rational upper;
};

MeasureEnclosure interval_measure_enclosure(const Rational& x, const Rational& y,
                                            const DigitDistribution& dist, unsigned depth);

}  // namespace steinhaus
