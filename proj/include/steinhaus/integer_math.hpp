#pragma once

#include "steinhaus/rational.hpp"

namespace steinhaus {

/// floor(sqrt(n)) for n >= 0, by integer Newton iteration started above the
/// root. The iterate decreases strictly until it reaches the floor, so the
/// first non-decreasing step stops at exactly floor(sqrt(n)).
Integer isqrt(const Integer& n);

Integer ipow(const Integer& base, unsigned long exp);

inline Integer ipow(unsigned long base, unsigned long exp) { return ipow(Integer(base), exp); }

}  // namespace steinhaus
