#pragma once

#include <cstddef>
#include <cstdint>

#include "severi/series.hpp"

namespace severi {

/// Sum of the positive divisors of n (n >= 1).
std::uint64_t sigma1(std::uint64_t n);

/// u = D G2 = sum n sigma1(n) q^n, with G2 = -1/24 + sum sigma1(n) q^n.
RatSeries u_series(std::size_t order);

/// Modular discriminant q prod_{n>=1} (1 - q^n)^24.
RatSeries delta_series(std::size_t order);

/// B3 = D G2 / q.
RatSeries b3_series(std::size_t order);

/// B4 = Delta * D^2 G2 / q^2.
RatSeries b4_series(std::size_t order);

/// The fixed quasimodular series of the generating-function formula, all
/// known to the same order.
struct FormCatalog {
  std::size_t order;
  RatSeries u;
  RatSeries b3;
  RatSeries b4;
  RatSeries delta_form;

  static FormCatalog build(std::size_t order);
};

}  // namespace severi
