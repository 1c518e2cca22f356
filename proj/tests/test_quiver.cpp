#include <doctest.h>

#include <random>

#include "hallforge/errors.hpp"
#include "hallforge/quiver.hpp"

using namespace hallforge;

TEST_CASE("quiver parsing") {
  Quiver a1 = Quiver::parse("a1");
  CHECK(a1.n() == 1);
  CHECK(a1.arrows().empty());
  CHECK(a1.text() == "a1");

  Quiver a2 = Quiver::parse("a2:>");
  CHECK(a2.n() == 2);
  REQUIRE(a2.arrows().size() == 1);
  CHECK(a2.arrows()[0].src == 1);
  CHECK(a2.arrows()[0].tgt == 2);

  Quiver a3 = Quiver::parse("a3:><");
  REQUIRE(a3.arrows().size() == 2);
  CHECK(a3.arrows()[0].src == 1);
  CHECK(a3.arrows()[0].tgt == 2);
  CHECK(a3.arrows()[1].src == 3);
  CHECK(a3.arrows()[1].tgt == 2);
  CHECK(a3.orientation() == 0);
  CHECK(Quiver::parse("a3").text() == "a3:>>");
  CHECK(Quiver::parse("a2:<").orientation() == -1);
  CHECK(Quiver::parse("a4:>>>").orientation() == 1);

  CHECK_THROWS_AS(Quiver::parse("b2"), parse_error);
  CHECK_THROWS_AS(Quiver::parse("a0"), parse_error);
  CHECK_THROWS_AS(Quiver::parse("a"), parse_error);
  CHECK_THROWS_AS(Quiver::parse("a3:>"), parse_error);
  CHECK_THROWS_AS(Quiver::parse("a2:x"), parse_error);
}

TEST_CASE("Euler form examples") {
  Quiver a1 = Quiver::parse("a1");
  CHECK(euler_form(a1, {2}, {3}) == 6);

  Quiver a2 = Quiver::parse("a2:>");
  CHECK(euler_form(a2, {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(a2, {0, 1}, {1, 0}) == 0);

  CHECK(symmetric_form(a2, {1, 0}, {0, 1}) == -1);
  CHECK(symmetric_form(a1, {1}, {1}) == 2);
  CHECK(euler_form(a2, {1, 1}, {1, 1}) == 1);
  CHECK(symmetric_form(a2, {1, 1}, {1, 1}) == 2 * euler_form(a2, {1, 1}, {1, 1}));

  CHECK_THROWS_AS(euler_form(a2, {1}, {0, 1}), std::invalid_argument);
}

TEST_CASE("Euler form bilinearity and symmetry") {
  std::mt19937 rng(3);
  for (const char* spec : {"a1", "a2:>", "a2:<", "a3:><", "a4:<><"}) {
    Quiver q = Quiver::parse(spec);
    for (int trial = 0; trial < 25; ++trial) {
      auto rand_vec = [&]() {
        DimVector v(q.n());
        for (auto& x : v) x = static_cast<int>(rng() % 7) - 3;
        return v;
      };
      DimVector d = rand_vec(), dp = rand_vec(), e = rand_vec();
      CHECK(euler_form(q, dim_add(d, dp), e) == euler_form(q, d, e) + euler_form(q, dp, e));
      CHECK(euler_form(q, e, dim_add(d, dp)) == euler_form(q, e, d) + euler_form(q, e, dp));
      CHECK(symmetric_form(q, d, e) == symmetric_form(q, e, d));
    }
  }
}
