#include "steinhaus/rng.hpp"

#include "steinhaus/errors.hpp"

namespace steinhaus {

std::uint64_t uniform_below(SplitMix64& gen, std::uint64_t bound) {
  if (bound == 0) fail(ErrorKind::InvalidArgument, "uniform_below with bound 0");
  if (bound == 1) return 0;
  // Accept w >= 2^64 mod bound: the accepted range holds an exact multiple of
  // bound values, so w % bound is uniform.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t w = gen.next();
    if (w >= threshold) return w % bound;
  }
}

}  // namespace steinhaus
