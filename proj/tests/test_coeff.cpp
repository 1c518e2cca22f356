#include <doctest.h>

#include <random>

#include "hallforge/coeff.hpp"

using namespace hallforge;

TEST_CASE("ring operations in Q(sqrt q)") {
  const std::uint32_t q = 2;
  Coeff one = Coeff::one(q), v = Coeff::v(q);

  CHECK((one + v) * (one - v) == Coeff(q, 1 - static_cast<long>(q), 0));
  CHECK(v * v == Coeff(q, q, 0));
  CHECK(Coeff(q, 1, 1) + Coeff(q, 0, -1) == one);
  CHECK((-v) + v == Coeff::zero(q));
  CHECK(Coeff::zero(q).is_zero());
}

TEST_CASE("v powers") {
  CHECK(Coeff::v_pow(2, 0) == Coeff::one(2));
  CHECK(Coeff::v_pow(2, -1) == Coeff(2, 0, mpq_class(1, 2)));
  CHECK(Coeff::v_pow(3, 3) == Coeff(3, 0, 3));
  CHECK(Coeff::v_pow(5, 2) == Coeff(5, 5, 0));
  CHECK(Coeff::v_pow(5, -2) == Coeff(5, mpq_class(1, 5), 0));

  std::mt19937 rng(5);
  for (std::uint32_t q : {2u, 3u, 5u})
    for (int trial = 0; trial < 60; ++trial) {
      long long m = static_cast<long long>(rng() % 41) - 20;
      long long n = static_cast<long long>(rng() % 41) - 20;
      CHECK(Coeff::v_pow(q, m) * Coeff::v_pow(q, n) == Coeff::v_pow(q, m + n));
    }
}

TEST_CASE("division") {
  const std::uint32_t q = 3;
  Coeff a(q, mpq_class(2, 7), mpq_class(-1, 4));
  Coeff b(q, mpq_class(5, 3), mpq_class(1, 2));
  CHECK((a / b) * b == a);
  CHECK(a / Coeff::one(q) == a);
  CHECK_THROWS_AS(a / Coeff::zero(q), std::domain_error);

  // norm denominators never vanish off zero: q is not a rational square
  Coeff sq(q, 3, 1);  // 3 + sqrt(3)
  CHECK((Coeff::one(q) / sq) * sq == Coeff::one(q));
}

TEST_CASE("q powers as rationals") {
  CHECK(Coeff::q_pow(2, 3) == 8);
  CHECK(Coeff::q_pow(2, 0) == 1);
  CHECK(Coeff::q_pow(2, -2) == mpq_class(1, 4));
  CHECK(Coeff::q_pow(5, -1) == mpq_class(1, 5));
}

TEST_CASE("text form") {
  CHECK(Coeff(2, mpq_class(1, 2), 0).to_string() == "1/2");
  CHECK(Coeff(2, 0, mpq_class(1, 2)).to_string() == "(0,1/2)");
  CHECK(Coeff(2, -3, mpq_class(2, 4)).to_string() == "(-3,1/2)");
}
