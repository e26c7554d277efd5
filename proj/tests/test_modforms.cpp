#include <doctest.h>

#include "severi/modforms.hpp"

using namespace severi;

namespace {

std::uint64_t sigma(std::uint64_t n, unsigned k) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      std::uint64_t p = 1;
      for (unsigned i = 0; i < k; ++i) p *= d;
      s += p;
    }
  }
  return s;
}

// Delta = (E4^3 - E6^2) / 1728, independent of the Euler product.
RatSeries delta_from_eisenstein(std::size_t order) {
  std::vector<Rat> e4(order + 1), e6(order + 1);
  e4[0] = 1;
  e6[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    e4[n] = Rat(240) * Rat(sigma(n, 3));
    e6[n] = Rat(-504) * Rat(sigma(n, 5));
  }
  const RatSeries a(e4), b(e6);
  return Rat(1, 1728) * (a * a * a - b * b);
}

}  // namespace

TEST_CASE("divisor sums") {
  CHECK(sigma1(1) == 1);
  CHECK(sigma1(6) == 12);
  CHECK(sigma1(4) == 7);
  for (std::uint64_t n = 1; n <= 200; ++n) CHECK(sigma1(n) == sigma(n, 1));
}

TEST_CASE("u series") {
  const RatSeries u = u_series(6);
  CHECK(u[0] == 0);
  CHECK(u[1] == 1);
  CHECK(u[2] == 6);
  CHECK(u[3] == 12);
  CHECK(u[4] == 28);
}

TEST_CASE("discriminant") {
  const RatSeries delta = delta_series(30);
  CHECK(delta[0] == 0);
  CHECK(delta[1] == 1);
  CHECK(delta[2] == -24);
  CHECK(delta[3] == 252);
  CHECK(delta == delta_from_eisenstein(30));
}

TEST_CASE("B3 and B4") {
  const RatSeries b3 = b3_series(8);
  CHECK(b3[0] == 1);
  CHECK(b3[1] == 6);
  CHECK(b3[2] == 12);

  const RatSeries b4 = b4_series(8);
  CHECK(b4[0] == 1);
  CHECK(b4[1] == -12);
  // (1 - 24q + 252q^2)(1 + 12q + 36q^2) at q^2
  CHECK(b4[2] == 252 - 24 * 12 + 36);
}

TEST_CASE("catalog invariants") {
  const std::size_t m = 25;
  const FormCatalog forms = FormCatalog::build(m);
  CHECK(forms.u.all_integer());
  CHECK(forms.b3.all_integer());
  CHECK(forms.b4.all_integer());
  CHECK(forms.delta_form.all_integer());
  CHECK(forms.delta_form[1] == 1);
  CHECK(forms.b4[0] == 1);
  CHECK(forms.u == RatSeries::monomial(1, 1, m) * forms.b3);
  CHECK(compose(revert(forms.u), forms.u) == RatSeries::monomial(1, 1, m));
  // B4 q^2 = Delta * D(u) with D = q d/dq
  const RatSeries full = forms.delta_form * q_derivative(forms.u);
  for (std::size_t n = 0; n + 2 <= m; ++n) CHECK(forms.b4[n] == full[n + 2]);
}
