#include "severi/modforms.hpp"

#include <vector>

#include "severi/error.hpp"

namespace severi {

namespace {

void require_order(std::size_t order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "form order must be at least 1");
}

}  // namespace

std::uint64_t sigma1(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sigma1 needs n >= 1");
  std::uint64_t sum = 0;
  for (std::uint64_t k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    sum += k;
    if (k != n / k) sum += n / k;
  }
  return sum;
}

RatSeries u_series(std::size_t order) {
  require_order(order);
  std::vector<Rat> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) c[n] = Rat(static_cast<unsigned long>(n * sigma1(n)));
  return RatSeries(std::move(c));
}

RatSeries delta_series(std::size_t order) {
  require_order(order);
  // prod (1 - q^n) to order-1, then its 24th power shifted by q.
  const std::size_t m = order - 1;
  RatSeries euler = RatSeries::constant(1, m);
  for (std::size_t n = 1; n <= m; ++n) {
    euler = euler * (RatSeries::constant(1, m) - RatSeries::monomial(1, n, m));
  }
  RatSeries power = RatSeries::constant(1, m);
  for (int i = 0; i < 24; ++i) power = power * euler;
  std::vector<Rat> c(order + 1);
  for (std::size_t n = 0; n <= m; ++n) c[n + 1] = power[n];
  return RatSeries(std::move(c));
}

RatSeries b3_series(std::size_t order) {
  require_order(order);
  std::vector<Rat> c(order + 1);
  for (std::size_t m = 0; m <= order; ++m) c[m] = Rat(static_cast<unsigned long>((m + 1) * sigma1(m + 1)));
  return RatSeries(std::move(c));
}

RatSeries b4_series(std::size_t order) {
  require_order(order);
  const RatSeries delta = delta_series(order + 1);
  std::vector<Rat> delta_over_q(order + 1), d2g2_over_q(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    delta_over_q[m] = delta[m + 1];
    const unsigned long n = m + 1;
    d2g2_over_q[m] = Rat(n * n * sigma1(n));
  }
  return RatSeries(std::move(delta_over_q)) * RatSeries(std::move(d2g2_over_q));
}

FormCatalog FormCatalog::build(std::size_t order) {
  return FormCatalog{order, u_series(order), b3_series(order), b4_series(order), delta_series(order)};
}

}  // namespace severi
