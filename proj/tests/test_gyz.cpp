#include <doctest.h>

#include "severi/error.hpp"
#include "severi/gyz.hpp"
#include "severi/output.hpp"

using namespace severi;

namespace {

SeveriCache& shared_cache() {
  static SeveriCache cache;
  return cache;
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

TEST_CASE("plane generating series") {
  const FormCatalog forms = FormCatalog::build(4);
  CHECK(plane_generating_series(2, 1, shared_cache(), forms).series == RatSeries({Rat(1), Rat(3)}));
  CHECK(plane_generating_series(3, 1, shared_cache(), forms).series == RatSeries({Rat(1), Rat(12)}));
  CHECK(plane_generating_series(5, 0, shared_cache(), forms).series == RatSeries({Rat(1)}));
  // order 2 at d = 3: 1 + 12 u + 21 u^2 with u = q + 6 q^2
  CHECK(plane_generating_series(3, 2, shared_cache(), forms).series == RatSeries({Rat(1), Rat(12), Rat(72 + 21)}));
  CHECK(code_of([&] { plane_generating_series(2, 2, shared_cache(), forms); }) == ErrorCode::DegreeTooSmall);
}

TEST_CASE("first-order extraction by hand") {
  const FormCatalog forms = FormCatalog::build(1);
  const std::vector<std::uint32_t> two{2, 3};
  const BSeriesSolution sol = extract_b_series(1, two, shared_cache(), forms);
  CHECK(sol.b1 == RatSeries({Rat(1), Rat(-1)}));
  CHECK(sol.b2 == RatSeries({Rat(1), Rat(5)}));
  CHECK(sol.consistent);
  CHECK(sol.integral);
  CHECK(sol.pairs_agreeing[1] == 1);

  const std::vector<std::uint32_t> three{2, 3, 4};
  const BSeriesSolution over = extract_b_series(1, three, shared_cache(), forms);
  CHECK(over.b1 == sol.b1);
  CHECK(over.b2 == sol.b2);
  CHECK(over.consistent);
  CHECK(over.pairs_agreeing[1] == 3);
}

TEST_CASE("order zero") {
  const FormCatalog forms = FormCatalog::build(1);
  const std::vector<std::uint32_t> ds{4, 9};
  const BSeriesSolution sol = extract_b_series(0, ds, shared_cache(), forms);
  CHECK(sol.b1 == RatSeries({Rat(1)}));
  CHECK(sol.b2 == RatSeries({Rat(1)}));
  CHECK(sol.consistent);
}

TEST_CASE("extraction preconditions") {
  const FormCatalog forms = FormCatalog::build(4);
  CHECK(code_of([&] { extract_b_series(3, std::vector<std::uint32_t>{3, 5}, shared_cache(), forms); }) ==
        ErrorCode::DegreeTooSmall);
  CHECK(code_of([&] { extract_b_series(3, std::vector<std::uint32_t>{5}, shared_cache(), forms); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { extract_b_series(3, std::vector<std::uint32_t>{5, 5}, shared_cache(), forms); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("a wrong form normalization is caught as inconsistency") {
  FormCatalog forms = FormCatalog::build(3);
  std::vector<Rat> bent = forms.b3.coeffs();
  bent[2] += 1;
  forms.b3 = RatSeries(bent);
  CHECK(code_of([&] { extract_b_series(3, std::vector<std::uint32_t>{4, 5, 6}, shared_cache(), forms); }) ==
        ErrorCode::InconsistentSystem);
}

TEST_CASE("solution is independent of the degree set and integral to order 8") {
  const std::size_t m = 8;
  const FormCatalog forms = FormCatalog::build(m);
  const std::vector<std::uint32_t> base{9, 10, 11, 12, 13};
  const std::vector<std::uint32_t> wider{9, 10, 11, 12, 13, 15, 17, 20};
  const BSeriesSolution a = extract_b_series(m, base, shared_cache(), forms);
  const BSeriesSolution b = extract_b_series(m, wider, shared_cache(), forms);
  CHECK(a.consistent);
  CHECK(b.consistent);
  CHECK(a.b1 == b.b1);
  CHECK(a.b2 == b.b2);
  CHECK(a.integral);
  CHECK(a.b1[0] == 1);
  CHECK(a.b2[0] == 1);
  CHECK(exp(a.log_b1) == a.b1);
  CHECK(exp(a.log_b2) == a.b2);
}

TEST_CASE("predictions reproduce held-out degrees") {
  const std::size_t m = 6;
  const FormCatalog forms = FormCatalog::build(m);
  const std::vector<std::uint32_t> ds{7, 8, 10, 11, 12};
  const BSeriesSolution sol = extract_b_series(m, ds, shared_cache(), forms);
  for (std::uint32_t d : {9u, 13u, 16u}) {
    const auto predicted = gyz_predict(plane_invariants(d), sol, forms, m);
    for (std::uint32_t delta = 0; delta <= m; ++delta) {
      CHECK(predicted[delta] == severi_degree(d, delta, shared_cache()));
    }
  }
  CHECK(gyz_predict(plane_invariants(2), sol, forms, 1)[1] == 3);

  const auto line = gyz_predict(plane_invariants(1), sol, forms, 3);
  CHECK(line[3] == 75);
  CHECK(severi_degree(1, 3, shared_cache()) == 0);
}

TEST_CASE("prediction preconditions") {
  const FormCatalog forms = FormCatalog::build(3);
  const BSeriesSolution sol = extract_b_series(3, std::vector<std::uint32_t>{4, 5}, shared_cache(), forms);
  CHECK(code_of([&] { gyz_predict(Invariants{1, 0, 9, 3}, sol, forms, 3); }) == ErrorCode::InvalidInvariants);
  CHECK(code_of([&] { gyz_predict(plane_invariants(5), sol, forms, 4); }) == ErrorCode::InvalidArgument);

  BSeriesSolution skewed = sol;
  skewed.b1 = RatSeries({Rat(1), Rat(1, 2), Rat(0), Rat(0)});
  CHECK(code_of([&] { gyz_predict(plane_invariants(5), skewed, forms, 3); }) == ErrorCode::NonIntegralPrediction);
}

TEST_CASE("solution JSON") {
  const FormCatalog forms = FormCatalog::build(4);
  const BSeriesSolution sol = extract_b_series(4, std::vector<std::uint32_t>{5, 6, 7}, shared_cache(), forms);
  const Json j = to_json(sol);
  CHECK(j.dump() ==
        R"({"order":4,"b1":["1","-1","-5","39","-345"],"b2":["1","5","2","35","-140"],"d_used":[5,6,7],)"
        R"("consistent":true,"integral":true})");
  const BSeriesSolution back = solution_from_json(j);
  CHECK(back.b1 == sol.b1);
  CHECK(back.b2 == sol.b2);
  CHECK(back.log_b1 == sol.log_b1);
  CHECK(back.d_used == sol.d_used);
  CHECK(gyz_predict(plane_invariants(9), back, forms, 4) == gyz_predict(plane_invariants(9), sol, forms, 4));
}
