#include <doctest.h>

#include <thread>

#include "hallforge/hall_classical.hpp"
#include "hallforge/suites.hpp"

using namespace hallforge;

namespace {

SuiteConfig make_cfg(const char* quiver, std::uint32_t q, DimVector dmax,
                     std::uint64_t samples = 0, std::uint64_t seed = 0) {
  SuiteConfig c;
  c.quiver = Quiver::parse(quiver);
  c.q = q;
  c.dmax = std::move(dmax);
  c.samples = samples;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("identity suites hold on a mixed-orientation quiver") {
  // the three-vertex zigzag drives the hom-count classification everywhere
  CHECK(run_green(make_cfg("a3:><", 2, {1, 1, 1})).ok());
  CHECK(run_rp_sum(make_cfg("a3:><", 2, {1, 1, 1})).ok());
  CHECK(run_phi(make_cfg("a3:><", 2, {1, 1, 1})).ok());
  CHECK(run_assoc_dh1(make_cfg("a3:><", 2, {1, 1, 1}, 40, 3)).ok());
  CHECK(run_assoc_dhz1(make_cfg("a3:><", 2, {1, 1, 1}, 40, 4)).ok());
  CHECK(run_assoc_dh2(make_cfg("a3:><", 2, {1, 1, 1}, 30, 5)).ok());
  CHECK(run_drinfeld(make_cfg("a3:><", 2, {1, 1, 1}, 6, 6)).ok());
  CHECK(run_triangular(make_cfg("a3:><", 2, {1, 1, 1})).ok());
  CHECK(run_ext_aggregate(make_cfg("a3:><", 2, {1, 1, 1}, 80, 7)).ok());
  CHECK(run_k_relations(make_cfg("a3:<>", 2, {1, 1, 1})).ok());
  CHECK(run_grading(make_cfg("a3:<>", 2, {1, 1, 1})).ok());
  CHECK(run_aut_crosscheck(make_cfg("a3:><", 3, {1, 1, 1})).ok());
}

TEST_CASE("commutator relation holds on sampled larger classes") {
  CHECK(run_drinfeld(make_cfg("a2:>", 2, {2, 2}, 5, 21)).ok());
  CHECK(run_drinfeld(make_cfg("a2:<", 2, {2, 2}, 5, 22)).ok());
}

TEST_CASE("four-vertex zigzag smoke test") {
  Catalog cat(Quiver::parse("a4:<><"), PrimeField(2), {1, 1, 1, 1});
  for (ClassId id = 0; id < cat.size(); ++id) {
    CHECK(cat.classify(cat.realize_class(id)) == id);
    CHECK(cat.classify(cat.realize_class(id), ClassifyMethod::kScan) == id);
  }
  CHECK(run_green(make_cfg("a4:<><", 2, {1, 1, 1, 1}, 60, 31)).ok());
  CHECK(run_phi(make_cfg("a4:<><", 2, {1, 1, 1, 1}, 60, 32)).ok());
  CHECK(run_drinfeld(make_cfg("a4:<><", 2, {1, 1, 1, 1}, 2, 33)).ok());
}

TEST_CASE("reports carry grid sizes") {
  auto rep = run_green(make_cfg("a2:>", 2, {1, 1}));
  CHECK(rep.cases == 5ull * 5 * 5 * 5);
  CHECK(rep.ok());
  auto sampled = run_green(make_cfg("a2:>", 3, {1, 1}, 17, 9));
  CHECK(sampled.cases == 17);
  CHECK(sampled.params.find("seed=9") != std::string::npos);
}

TEST_CASE("catalog caches are safe under concurrent readers") {
  Catalog cat(Quiver::parse("a2:>"), PrimeField(3), {3, 3});
  std::vector<std::thread> workers;
  std::vector<mpz_class> totals(4);
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&cat, &totals, t] {
      mpz_class acc = 0;
      for (ClassId L = 0; L < cat.size(); ++L)
        for (ClassId M = 0; M < cat.size(); ++M)
          for (ClassId N = 0; N < cat.size(); ++N)
            acc += hall_g(cat, L, M, N, t % 2 ? GRoute::kSubrep : GRoute::kAuto);
      totals[t] = acc;
    });
  for (auto& w : workers) w.join();
  CHECK(totals[0] == totals[1]);
  CHECK(totals[1] == totals[2]);
  CHECK(totals[2] == totals[3]);
  CHECK(totals[0] > 0);
}

TEST_CASE("resource limits surface as typed errors") {
  Quiver a1 = Quiver::parse("a1");
  PrimeField f2(2);
  Representation big = realize(a1, f2, IsoClass::parse("(1-1)x4"));
  CHECK_THROWS_AS(subreps(big, 8), resource_limit_error);
  CHECK_THROWS_AS(aut_count_brute(big, 1000), resource_limit_error);

  // subspaces per vertex fit, but the slice tuple count does not
  Catalog tiny(a1, PrimeField(3), {4}, 100);
  ClassId k4 = tiny.require_id(IsoClass::parse("(1-1)x4"));
  CHECK_THROWS_AS(tiny.g_slice(k4, DimVector{2}), resource_limit_error);
}
