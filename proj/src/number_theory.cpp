#include "tdeg/number_theory.hpp"

#include "tdeg/error.hpp"

namespace tdeg {

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer multiplicative_order(const Integer& b, const Integer& a) {
  if (a < 1) throw Error(ErrorKind::InvalidParam, "modulus must be >= 1");
  if (gcd(a, b) != 1) throw Error(ErrorKind::NotCoprime, "gcd(" + a.get_str() + ", " + b.get_str() + ") != 1");
  if (a == 1) return 1;
  const Integer base = mod_floor(b, a);
  Integer power = base;
  Integer i = 1;
  while (power != 1) {
    power = mod_floor(power * base, a);
    ++i;
  }
  return i;
}

}  // namespace tdeg
