#pragma once

#include <random>

#include "itrails/linalg.hpp"

namespace itrails::testutil {

inline Rat make_rat(Int num, Int den) {
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

// small random positive rational with numerator/denominator in [1, 9]
inline Rat random_positive_rat(std::mt19937_64& rng) {
  return make_rat(1 + static_cast<Int>(rng() % 9), 1 + static_cast<Int>(rng() % 9));
}

// q-adic valuation of a nonzero rational
inline Int valuation(const Rat& x, Int q) {
  Int v = 0;
  mpz_class num = x.get_num(), den = x.get_den(), qq(static_cast<long>(q));
  while (num % qq == 0) {
    num /= qq;
    ++v;
  }
  while (den % qq == 0) {
    den /= qq;
    --v;
  }
  return v;
}

inline Rat prime_power(Int e, Int q) {
  Rat v = 1;
  for (Int k = 0; k < (e >= 0 ? e : -e); ++k) v *= rat_of(q);
  return e >= 0 ? v : Rat(1) / v;
}

}  // namespace itrails::testutil
