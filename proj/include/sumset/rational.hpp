#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sumset {

using Rational = mpq_class;
using RationalPoint = std::vector<Rational>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

// Always `num/den`, also when den == 1.
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Fixed 12-significant-digit rendering, for human consumption only.
std::string to_decimal_string(const Rational& q);

// base^exp exactly.
Rational pow(const Rational& base, unsigned long exp);

}  // namespace sumset
