#include <doctest.h>

#include "hallforge/errors.hpp"
#include "hallforge/expr.hpp"

using namespace hallforge;

TEST_CASE("element grammar parses and evaluates") {
  Catalog cat(Quiver::parse("a2:>"), PrimeField(2), {2, 2});
  RingelHall rh(cat);

  RHElement x = eval_rh(rh, parse_element("u[(1-1)x1] * u[(2-2)x1]", 2));
  RHElement expect;
  expect[RHKey{cat.require_id(IsoClass::parse("(1-1)x1+(2-2)x1")), DimVector{0, 0}}] =
      Coeff::v_pow(2, -1);
  expect[RHKey{cat.require_id(IsoClass::parse("(1-2)x1")), DimVector{0, 0}}] =
      Coeff::v_pow(2, -1);
  CHECK(x == expect);

  // whitespace, juxtaposition and explicit coefficients
  RHElement y = eval_rh(rh, parse_element("(0,1/2)*u[(1-1)x1+(2-2)x1] + (0,1/2) u[(1-2)x1]", 2));
  CHECK(y == expect);

  RHElement z = eval_rh(rh, parse_element("u[(1-1)x1]K[1,0]", 2));
  RHElement ez;
  ez[RHKey{cat.require_id(IsoClass::parse("(1-1)x1")), DimVector{1, 0}}] = Coeff::one(2);
  CHECK(z == ez);
}

TEST_CASE("print then reparse is stable") {
  Catalog cat(Quiver::parse("a2:>"), PrimeField(2), {2, 2});
  RingelHall rh(cat);
  DH2 d2(cat);

  for (const char* src : {"u[(1-1)x1]*u[(2-2)x1]", "u[0]", "(3/2)*K[1,-1]",
                          "u[(1-2)x1]*u[(1-2)x1]", "(1,1)*u[(1-1)x2]*K[0,2] + (2)*u[0]"}) {
    RHElement once = eval_rh(rh, parse_element(src, 2));
    RHElement twice = eval_rh(rh, parse_element(to_text(cat, once), 2));
    CHECK(once == twice);
  }

  for (const char* src :
       {"u[(1-1)x1;(2-2)x1]", "Ks[1,2]*K[-1,0]", "u[(1-1)x1;0]*u[0;(2-2)x1]", "(0,1)*u[0;0]"}) {
    DH2Element once = eval_dh2(d2, parse_element(src, 2));
    DH2Element twice = eval_dh2(d2, parse_element(to_text(cat, once), 2));
    CHECK(once == twice);
  }
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_element("", 2), parse_error);
  CHECK_THROWS_AS(parse_element("u[(1-1x1]", 2), parse_error);
  CHECK_THROWS_AS(parse_element("w[1]", 2), parse_error);
  CHECK_THROWS_AS(parse_element("u[(1-1)x1] +", 2), parse_error);
  CHECK_THROWS_AS(parse_element("(1,)*u[0]", 2), parse_error);
  try {
    parse_element("u[(0-1)x1]", 2);
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("algebra-specific factor validation") {
  Catalog cat(Quiver::parse("a1"), PrimeField(2), {2});
  RingelHall rh(cat);
  DH1 d1(cat);
  CHECK_THROWS_AS(eval_rh(rh, parse_element("Ks[1]", 2)), std::invalid_argument);
  CHECK_THROWS_AS(eval_rh(rh, parse_element("u[(1-1)x1;(1-1)x1]", 2)), std::invalid_argument);
  CHECK_THROWS_AS(eval_dh1(d1, parse_element("K[1]", 2)), std::invalid_argument);
  CHECK_THROWS_AS(eval_dh1(d1, parse_element("u[0;0]", 2)), std::invalid_argument);
}
