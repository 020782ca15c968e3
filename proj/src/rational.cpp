#include "sumset/rational.hpp"

#include <cstdio>

namespace sumset {

std::string to_decimal_string(const Rational& q) {
  mpf_class f(q, 256);
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.12Fg", f.get_mpf_t());
  return buf;
}

Rational pow(const Rational& base, unsigned long exp) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace sumset
