#include "steinhaus/integer_math.hpp"

#include "steinhaus/errors.hpp"

namespace steinhaus {

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) fail(ErrorKind::OutOfRange, "isqrt of negative integer");
  if (n < 2) return n;
  // Initial x = 2^ceil(bits/2) satisfies x^2 >= 2^bits > n.
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x = Integer(1) << ((bits + 1) / 2);
  for (;;) {
    Integer y = (x + n / x) / 2;
    if (y >= x) return x;
    x = std::move(y);
  }
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace steinhaus
