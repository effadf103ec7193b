#pragma once

#include <random>

#include "crinv/series.hpp"

namespace crinv::test {

inline Rational random_rational(std::mt19937& rng, int max_num = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  const int n = num(rng);
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

inline GaussianRational random_gaussian(std::mt19937& rng, int max_num = 5, int max_den = 4) {
  const Rational re = random_rational(rng, max_num, max_den);
  return {re, random_rational(rng, max_num, max_den)};
}

/// Dense series with every coefficient random.
inline TruncatedSeries random_series(std::mt19937& rng, int order, int max_num = 5, int max_den = 4) {
  TruncatedSeries s(order);
  for (int d = 0; d <= order; ++d)
    for (int l = 0; l <= d; ++l) s.set_coeff(d - l, l, random_gaussian(rng, max_num, max_den));
  return s;
}

/// Real series 1 + (random terms of degree 1..dense_through), exact through `order`.
inline TruncatedSeries random_real_e2phi(std::mt19937& rng, int order, int dense_through = 4) {
  TruncatedSeries s = TruncatedSeries::constant(GaussianRational(1), order);
  for (int d = 1; d <= std::min(dense_through, order); ++d)
    for (int l = 0; 2 * l <= d; ++l) {
      const int k = d - l;
      GaussianRational c = k == l ? GaussianRational(random_rational(rng, 3, 3)) : random_gaussian(rng, 3, 3);
      s.set_coeff(k, l, c);
      s.set_coeff(l, k, c.conj());
    }
  return s.as_real();
}

}  // namespace crinv::test
