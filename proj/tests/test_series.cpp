#include <doctest.h>

#include <random>

#include "severi/error.hpp"
#include "severi/series.hpp"

using namespace severi;

namespace {

RatSeries ints(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return RatSeries(std::move(v));
}

RatSeries random_series(std::mt19937_64& rng, std::size_t order, long constant) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<Rat> v(order + 1);
  v[0] = constant;
  for (std::size_t i = 1; i <= order; ++i) v[i] = coeff(rng);
  return RatSeries(std::move(v));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("rational text form") {
  CHECK(to_string(Rat(3, 2)) == "3/2");
  CHECK(to_string(Rat(4)) == "4");
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(to_string(parse_rat("-10/4")) == "-5/2");
  CHECK(code_of([] { parse_rat("1/0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rat("1/-2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rat("abc"); }) == ErrorCode::ParseError);
  // stored reduced with a positive denominator
  const Rat r = make_rat(BigInt(6), BigInt(-4));
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
}

TEST_CASE("addition") {
  CHECK(ints({1, 1}) + ints({1, -1}) == ints({2, 0}));
  const RatSeries s = ints({4, -2, 7});
  CHECK(RatSeries(2) + s == s);
  CHECK(ints({0, 1, 1}) + ints({0, 0, 1}) == ints({0, 1, 2}));
  // mixed orders truncate to the smaller one
  CHECK((ints({1, 1, 1, 1}) + ints({1, 1})).order() == 1);
}

TEST_CASE("multiplication") {
  CHECK(ints({1, 1, 0}) * ints({1, -1, 0}) == ints({1, 0, -1}));
  CHECK(ints({0, 1, 0}) * ints({0, 1, 0}) == ints({0, 0, 1}));
  CHECK(ints({1, 1, 1}) * ints({1, 1, 1}) == ints({1, 2, 3}));

  // direct convolution oracle on the full square, truncated afterwards
  const std::vector<long> a{1, 1, 1};
  std::vector<long> full(5, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) full[i + j] += a[i] * a[j];
  CHECK(full[0] == 1);
  CHECK(full[1] == 2);
  CHECK(full[2] == 3);
}

TEST_CASE("inverse") {
  CHECK(inverse(ints({1, -1, 0, 0, 0})) == ints({1, 1, 1, 1, 1}));
  CHECK(inverse(ints({1})) == ints({1}));
  // 1/(1+2q) by back-substitution equals the geometric series in -2q
  const RatSeries inv = inverse(ints({1, 2, 0, 0, 0, 0}));
  long power = 1;
  for (std::size_t n = 0; n <= 5; ++n, power *= -2) CHECK(inv[n] == power);
  CHECK(code_of([] { inverse(ints({0, 1})); }) == ErrorCode::ZeroConstantTerm);
}

TEST_CASE("exp") {
  const RatSeries e = exp(ints({0, 1, 0, 0, 0, 0}));
  BigInt fact = 1;
  for (unsigned m = 0; m <= 5; ++m) {
    if (m) fact *= m;
    CHECK(e[m] == Rat(1) / Rat(fact));
  }
  CHECK(exp(ints({0, 0, 0})) == ints({1, 0, 0}));

  // term-by-term oracle: sum_k a^k / k! with a = q + q^2
  const RatSeries a = ints({0, 1, 1, 0});
  RatSeries power = RatSeries::constant(1, 3);
  RatSeries oracle = RatSeries::constant(1, 3);
  for (unsigned k = 1; k <= 3; ++k) {
    power = power * a;
    oracle = oracle + Rat(1) / Rat(factorial(k)) * power;
  }
  const RatSeries got = exp(a);
  CHECK(got == oracle);
  CHECK(got == RatSeries({Rat(1), Rat(1), Rat(3, 2), Rat(7, 6)}));
  CHECK(code_of([] { exp(ints({1, 1})); }) == ErrorCode::NonzeroConstantTerm);
}

TEST_CASE("log") {
  const RatSeries l = log(inverse(ints({1, -1, 0, 0, 0})));
  CHECK(l == RatSeries({Rat(0), Rat(1), Rat(1, 2), Rat(1, 3), Rat(1, 4)}));
  CHECK(log(ints({1, 0, 0})) == ints({0, 0, 0}));
  CHECK(log(exp(ints({0, 1, 5, 0}))) == ints({0, 1, 5, 0}));
  CHECK(code_of([] { log(ints({2, 1})); }) == ErrorCode::ConstantTermNotOne);
}

TEST_CASE("rational powers") {
  const RatSeries root = pow(ints({1, 1, 0, 0}), Rat(1, 2));
  CHECK(root[1] == Rat(1, 2));
  CHECK(root[2] == Rat(-1, 8));
  CHECK(root[3] == Rat(1, 16));
  CHECK(pow(ints({1, 3, 5}), Rat(0)) == ints({1, 0, 0}));
  CHECK(root * root == ints({1, 1, 0, 0}));
  CHECK(pow(ints({1, 1, 0, 0}), Rat(-1)) == inverse(ints({1, 1, 0, 0})));
  CHECK(code_of([] { pow(ints({0, 1}), Rat(2)); }) == ErrorCode::ConstantTermNotOne);
}

TEST_CASE("composition") {
  CHECK(compose(ints({1, 3, 0}), ints({0, 1, 6})) == ints({1, 3, 18}));
  const RatSeries f = ints({5, -2, 7, 1});
  CHECK(compose(f, ints({0, 1, 0, 0})) == f);
  // u^2 at u = q + q^2, expanded directly: q^2 + 2q^3 + q^4
  CHECK(compose(ints({0, 0, 1, 0}), ints({0, 1, 1, 0})) == ints({0, 0, 1, 2}));
  CHECK(code_of([] { compose(ints({1, 1}), ints({1, 1})); }) == ErrorCode::PositiveValuationRequired);
}

TEST_CASE("reversion") {
  CHECK(revert(ints({0, 1, 0, 0})) == ints({0, 1, 0, 0}));

  // Lagrange inversion: [q^n] of the inverse of w + w^2 is
  // (1/n) [w^(n-1)] (1 + w)^(-n) = (-1)^(n-1) C(2n-2, n-1) / n.
  const std::size_t m = 10;
  std::vector<Rat> g(m + 1);
  g[1] = 1;
  g[2] = 1;
  const RatSeries h = revert(RatSeries(g));
  CHECK(h[0] == 0);
  for (unsigned n = 1; n <= m; ++n) {
    const Rat expected = Rat(binomial(2 * n - 2, n - 1)) / Rat(n) * (n % 2 ? 1 : -1);
    CHECK(h[n] == expected);
  }
  CHECK(h[2] == -1);
  CHECK(h[3] == 2);

  CHECK(code_of([] { revert(ints({0, 0, 1})); }) == ErrorCode::NotReversible);
  CHECK(code_of([] { revert(ints({1, 1})); }) == ErrorCode::NotReversible);
}

TEST_CASE("q derivative") {
  CHECK(q_derivative(ints({0, 1})) == ints({0, 1}));
  CHECK(q_derivative(ints({7, 0, 0})) == ints({0, 0, 0}));
  CHECK(q_derivative(ints({0, 1, 1, 1})) == ints({0, 1, 2, 3}));
}

TEST_CASE("text serialization") {
  const RatSeries s({Rat(1), Rat(-3, 2), Rat(0)});
  CHECK(to_strings(s) == std::vector<std::string>{"1", "-3/2", "0"});
  CHECK(series_from_strings(to_strings(s)) == s);
}

TEST_CASE("exp/log inverse on random inputs") {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 20; ++trial) {
    const RatSeries a = random_series(rng, 30, 0);
    CHECK(log(exp(a)) == a);
    const RatSeries one_plus = random_series(rng, 30, 1);
    CHECK(exp(log(one_plus)) == one_plus);
  }
}

TEST_CASE("power additivity and reversion on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> small(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const RatSeries a = random_series(rng, 30, 1);
    const Rat p = make_rat(small(rng), den(rng));
    const Rat q = make_rat(small(rng), den(rng));
    CHECK(pow(a, p) * pow(a, q) == pow(a, p + q));

    std::vector<Rat> g = random_series(rng, 30, 0).coeffs();
    g[1] = 1;
    const RatSeries gs(g);
    const RatSeries h = revert(gs);
    CHECK(compose(h, gs) == RatSeries::monomial(1, 1, 30));
    CHECK(compose(gs, h) == RatSeries::monomial(1, 1, 30));
  }
}
