#include <doctest.h>

#include "hallforge/dh1.hpp"

using namespace hallforge;

namespace {

IsoClass cls(const char* lit) { return IsoClass::parse(lit); }

}  // namespace

TEST_CASE("1-periodic product in u-generators") {
  Catalog a1(Quiver::parse("a1"), PrimeField(2), {2});
  DH1 alg(a1);
  ClassId k = a1.require_id(cls("(1-1)x1"));
  ClassId kk = a1.require_id(cls("(1-1)x2"));
  Coeff one = Coeff::one(2);

  for (ClassId m = 0; m < a1.size(); ++m) {
    DH1Element x = alg.monomial(m, Coeff(2, 5, mpq_class(1, 3)));
    CHECK(alg.product_u(alg.unit(), x) == x);
    CHECK(alg.product_u(x, alg.unit()) == x);
  }

  DH1Element prod = alg.product_u(alg.monomial(k, one), alg.monomial(k, one));
  DH1Element expect;
  expect[kk] = Coeff(2, 0, mpq_class(1, 2));  // (v/q) u_{k^2} at q = 2
  expect[a1.zero_id()] = Coeff(2, 0, mpq_class(1, 2));
  CHECK(prod == expect);

  Catalog a2(Quiver::parse("a2:>"), PrimeField(2), {1, 1});
  DH1 alg2(a2);
  ClassId S1 = a2.require_id(cls("(1-1)x1"));
  ClassId S2 = a2.require_id(cls("(2-2)x1"));
  DH1Element prod2 = alg2.product_u(alg2.monomial(S1, one), alg2.monomial(S2, one));
  DH1Element expect2;
  expect2[a2.require_id(cls("(1-1)x1+(2-2)x1"))] = Coeff::v_pow(2, -1);
  expect2[a2.require_id(cls("(1-2)x1"))] = Coeff::v_pow(2, -1);
  CHECK(prod2 == expect2);
}

TEST_CASE("odd-periodic structure constants") {
  Catalog a1(Quiver::parse("a1"), PrimeField(2), {2});
  DH1 alg(a1);
  ClassId k = a1.require_id(cls("(1-1)x1"));
  ClassId kk = a1.require_id(cls("(1-1)x2"));

  for (ClassId m = 0; m < a1.size(); ++m)
    for (ClassId target = 0; target < a1.size(); ++target) {
      Coeff g = alg.g_structure(a1.zero_id(), a1.zero_id(), target);
      CHECK(g == (target == a1.zero_id() ? Coeff::one(2) : Coeff::zero(2)));
      CHECK(alg.g_structure(a1.zero_id(), m, target) ==
            (target == m ? Coeff::one(2) : Coeff::zero(2)));
    }

  CHECK(alg.g_structure(k, k, kk) == Coeff(2, 0, mpq_class(3, 2)));  // 3 v^{-1}
  CHECK(alg.g_structure(k, k, a1.zero_id()) == Coeff::v_pow(2, 1));

  DH1Element mu_prod = alg.product_mu(alg.monomial(k, Coeff::one(2)),
                                      alg.monomial(k, Coeff::one(2)));
  DH1Element expect;
  expect[kk] = Coeff(2, 0, mpq_class(3, 2));
  expect[a1.zero_id()] = Coeff::v_pow(2, 1);
  CHECK(mu_prod == expect);
}

TEST_CASE("1-periodic automorphism counts") {
  Catalog a1(Quiver::parse("a1"), PrimeField(2), {1});
  DH1 alg(a1);
  CHECK(alg.tilde_aut(a1.require_id(cls("(1-1)x1"))) == 1);
  CHECK(alg.tilde_aut(a1.zero_id()) == 1);

  Catalog a2(Quiver::parse("a2:>"), PrimeField(2), {1, 1});
  DH1 alg2(a2);
  CHECK(alg2.tilde_aut(a2.require_id(cls("(1-2)x1"))) == 1);

  for (const char* spec : {"a2:>", "a2:<"}) {
    Catalog cat(Quiver::parse(spec), PrimeField(3), {2, 2});
    DH1 a(cat);
    for (ClassId id = 0; id < cat.size(); ++id) {
      CHECK(a.tilde_aut(id) >= cat.aut(id));
      CHECK((a.tilde_aut(id) == cat.aut(id)) == (cat.ext1(id, id) == 0));
    }
  }
}

TEST_CASE("basis change to the odd-periodic presentation") {
  Catalog a1(Quiver::parse("a1"), PrimeField(2), {2});
  DH1 alg(a1);
  ClassId k = a1.require_id(cls("(1-1)x1"));
  ClassId kk = a1.require_id(cls("(1-1)x2"));
  Coeff one = Coeff::one(2);

  CHECK(alg.phi(alg.unit()) == alg.unit());
  CHECK(alg.phi(alg.monomial(k, one)) == alg.monomial(k, Coeff::v_pow(2, -1)));
  CHECK(alg.phi(alg.monomial(kk, one)) == alg.monomial(kk, Coeff(2, mpq_class(3, 2), 0)));
}

TEST_CASE("the basis change intertwines the two products") {
  Catalog a1(Quiver::parse("a1"), PrimeField(2), {2});
  DH1 alg(a1);
  ClassId k = a1.require_id(cls("(1-1)x1"));
  CHECK(alg.phi_check(k, k));
  for (ClassId m = 0; m < a1.size(); ++m) {
    CHECK(alg.phi_check(a1.zero_id(), m));
    CHECK(alg.phi_check(m, a1.zero_id()));
  }

  Catalog a2(Quiver::parse("a2:>"), PrimeField(2), {2, 2});
  DH1 alg2(a2);
  ClassId S1 = a2.require_id(cls("(1-1)x1"));
  ClassId S2 = a2.require_id(cls("(2-2)x1"));
  CHECK(alg2.phi_check(S1, S2));
  CHECK(alg2.phi_check(S2, S1));
}
