#include <doctest.h>

#include "severi/error.hpp"
#include "severi/tangency.hpp"

using namespace severi;

TEST_CASE("weight and size") {
  CHECK(TangencySeq{2}.weight() == 2);
  CHECK(TangencySeq{0, 1}.weight() == 2);
  CHECK(TangencySeq{}.weight() == 0);
  CHECK(TangencySeq{2}.size() == 2);
  CHECK(TangencySeq{0, 1}.size() == 1);
  CHECK(TangencySeq{}.size() == 0);
  CHECK(TangencySeq{1, 0, 2}.weight() == 7);
}

TEST_CASE("canonical form drops trailing zeros") {
  CHECK(TangencySeq{2, 0, 1, 0, 0} == TangencySeq{2, 0, 1});
  CHECK(TangencySeq{0, 0} == TangencySeq{});
  CHECK(TangencySeq({1, 0}).parts().size() == 1);
  CHECK(TangencySeq{0, 1}.minus_unit(2) == TangencySeq{});
  CHECK(TangencySeq::parse("3,0,0") == TangencySeq{3});
}

TEST_CASE("1-based orders") {
  const TangencySeq s{2, 0, 1};
  CHECK(s.count(1) == 2);
  CHECK(s.count(2) == 0);
  CHECK(s.count(3) == 1);
  CHECK(s.count(4) == 0);
  CHECK(s.count(0) == 0);
  CHECK(s.plus_unit(5) == TangencySeq{2, 0, 1, 0, 1});
  CHECK_THROWS_AS(s.minus_unit(2), Error);
}

TEST_CASE("text form") {
  CHECK(TangencySeq{2, 0, 1}.to_text() == "2,0,1");
  CHECK(TangencySeq{}.to_text().empty());
  CHECK(TangencySeq::parse("") == TangencySeq{});
  CHECK(TangencySeq::parse("-") == TangencySeq{});
  CHECK(TangencySeq::parse(TangencySeq{4, 1}.to_text()) == TangencySeq{4, 1});
  CHECK_THROWS_AS(TangencySeq::parse("1,,2"), Error);
  CHECK_THROWS_AS(TangencySeq::parse("1,-2"), Error);
  CHECK_THROWS_AS(TangencySeq::parse("x"), Error);
}

TEST_CASE("binomial and weighted power") {
  CHECK(seq_binomial(TangencySeq{2, 1}, TangencySeq{1, 1}) == 2);
  const TangencySeq s{3, 0, 2, 1};
  CHECK(seq_binomial(s, s) == 1);
  CHECK(seq_binomial(TangencySeq{3}, TangencySeq{5}) == 0);
  CHECK(seq_binomial(TangencySeq{1}, TangencySeq{0, 1}) == 0);
  CHECK(seq_binomial(TangencySeq{4, 2}, TangencySeq{}) == 1);

  CHECK(seq_weighted_power(TangencySeq{}) == 1);
  CHECK(seq_weighted_power(TangencySeq{0, 2}) == 4);
  CHECK(seq_weighted_power(TangencySeq{1, 1}) == 2);
  CHECK(seq_weighted_power(TangencySeq{5, 0, 2}) == 9);
}

TEST_CASE("point count") {
  CHECK(point_count(ChState{2, 0, {}, {2}}) == 5);
  CHECK(point_count(ChState{1, 0, {}, {1}}) == 2);
  CHECK(point_count(ChState{2, 1, {1}, {1}}) == 3);
  // absolute case is d(d+3)/2 - delta
  for (std::uint32_t d = 1; d <= 12; ++d) {
    for (std::uint32_t delta = 0; delta <= 6; ++delta) {
      CHECK(point_count(ChState{d, delta, {}, TangencySeq::transverse(d)}) ==
            static_cast<std::int64_t>(d * (d + 3) / 2) - delta);
    }
  }
  try {
    point_count(ChState{3, 0, {1}, {1}});
    FAIL("weight mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidState);
  }
}
