#include "hallforge/suites.hpp"

#include <random>
#include <sstream>

#include "hallforge/dh1.hpp"
#include "hallforge/dh2.hpp"
#include "hallforge/expr.hpp"
#include "hallforge/hall_classical.hpp"

namespace hallforge {

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << "suite " << suite << " [" << params << "]: " << cases << " cases, " << failures
     << " failures";
  if (failures) os << "\n  first counterexample: " << first_failure;
  return os.str();
}

std::vector<ClassId> ids_within(const Catalog& cat, const DimVector& bound) {
  std::vector<ClassId> out;
  for (ClassId id = 0; id < cat.size(); ++id)
    if (dim_leq(cat.dim(id), bound)) out.push_back(id);
  return out;
}

DimVector scale_dim(const DimVector& d, int k) {
  DimVector out = d;
  for (auto& x : out) x *= k;
  return out;
}

namespace {

std::string base_params(const SuiteConfig& cfg) {
  std::ostringstream os;
  os << "quiver=" << cfg.quiver.text() << " q=" << cfg.q << " max-dim=" << dim_to_string(cfg.dmax);
  if (cfg.samples) os << " samples=" << cfg.samples << " seed=" << cfg.seed;
  return os.str();
}

/// Visits either the whole grid of t-tuples over ids or `samples` seeded
/// random tuples.
template <typename Check>
void drive(const std::vector<ClassId>& ids, int arity, const SuiteConfig& cfg, Check&& check) {
  if (ids.empty()) return;
  std::vector<ClassId> tuple(arity);
  if (cfg.samples == 0) {
    std::vector<std::size_t> idx(arity, 0);
    for (;;) {
      for (int i = 0; i < arity; ++i) tuple[i] = ids[idx[i]];
      check(tuple);
      int k = 0;
      while (k < arity && ++idx[k] == ids.size()) idx[k++] = 0;
      if (k == arity) break;
    }
  } else {
    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
      for (int i = 0; i < arity; ++i) tuple[i] = ids[rng() % ids.size()];
      check(tuple);
    }
  }
}

void record(SuiteReport& rep, bool ok, const std::string& what) {
  ++rep.cases;
  if (!ok) {
    ++rep.failures;
    if (rep.first_failure.empty()) rep.first_failure = what;
  }
}

std::string name_of(const Catalog& cat, ClassId id) { return cat.cls(id).to_string(); }

std::vector<DimVector> zero_one_vectors(int n) {
  std::vector<DimVector> out;
  DimVector v(n, 0);
  for (;;) {
    out.push_back(v);
    int k = 0;
    while (k < n && ++v[k] > 1) v[k++] = 0;
    if (k == n) break;
  }
  return out;
}

}  // namespace

SuiteReport run_green(const SuiteConfig& cfg) {
  SuiteReport rep{"green", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), scale_dim(cfg.dmax, 2), cfg.limit);
  RingelHall rh(cat);
  auto ids = ids_within(cat, cfg.dmax);
  drive(ids, 4, cfg, [&](const std::vector<ClassId>& t) {
    auto res = rh.green_check(t[0], t[1], t[2], t[3]);
    record(rep, res.holds,
           "(" + name_of(cat, t[0]) + ", " + name_of(cat, t[1]) + ", " + name_of(cat, t[2]) +
               ", " + name_of(cat, t[3]) + "): lhs=" + res.lhs.to_string() +
               " rhs=" + res.rhs.to_string());
  });
  return rep;
}

SuiteReport run_rp_sum(const SuiteConfig& cfg) {
  SuiteReport rep{"rp-sum", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), scale_dim(cfg.dmax, 2), cfg.limit);
  auto ids = ids_within(cat, cfg.dmax);
  drive(ids, 2, cfg, [&](const std::vector<ClassId>& t) {
    ClassId M = t[0], N = t[1];
    // submodule-count route on the left, linear-algebra dimension on the right
    mpz_class total = 0;
    for (ClassId L : cat.ids_with_dim(dim_add(cat.dim(M), cat.dim(N)))) {
      mpz_class g = hall_g(cat, L, M, N, GRoute::kSubrep);
      if (g == 0) continue;
      mpz_class num = g * field_power(cat.field(), cat.hom(M, N)) * cat.aut(M) * cat.aut(N);
      mpz_class qout, r;
      mpz_tdiv_qr(qout.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), cat.aut(L).get_mpz_t());
      if (r != 0) {
        record(rep, false, "non-integral extension count at (" + name_of(cat, M) + ", " +
                               name_of(cat, N) + ", " + name_of(cat, L) + ")");
        return;
      }
      total += qout;
    }
    mpz_class expected = field_power(cat.field(), cat.ext1(M, N));
    record(rep, total == expected,
           "(" + name_of(cat, M) + ", " + name_of(cat, N) + "): sum=" + total.get_str() +
               " expected=" + expected.get_str());
  });
  return rep;
}

namespace {

/// u-generator labels u_{A0 + A1[1]} with combined dimension under the bound.
std::vector<std::pair<ClassId, ClassId>> dh2_generators(const Catalog& cat,
                                                        const DimVector& bound) {
  std::vector<std::pair<ClassId, ClassId>> gens;
  for (ClassId a0 = 0; a0 < cat.size(); ++a0) {
    if (!dim_leq(cat.dim(a0), bound)) continue;
    for (ClassId a1 = 0; a1 < cat.size(); ++a1)
      if (dim_leq(dim_add(cat.dim(a0), cat.dim(a1)), bound)) gens.emplace_back(a0, a1);
  }
  return gens;
}

}  // namespace

SuiteReport run_assoc_dh2(const SuiteConfig& cfg) {
  SuiteReport rep{"assoc-dh2", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), scale_dim(cfg.dmax, 3), cfg.limit);
  DH2 alg(cat);
  auto gens = dh2_generators(cat, cfg.dmax);
  DimVector z = dim_zero(cat.quiver().n());
  auto gen_elem = [&](std::size_t i) {
    return alg.monomial(DH2Key{z, z, gens[i].first, gens[i].second}, Coeff::one(cfg.q));
  };
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    DH2Element x = gen_elem(i), y = gen_elem(j), zx = gen_elem(k);
    DH2Element left = alg.product(alg.product(x, y), zx);
    DH2Element right = alg.product(x, alg.product(y, zx));
    record(rep, left == right,
           "u[" + name_of(cat, gens[i].first) + ";" + name_of(cat, gens[i].second) + "] , u[" +
               name_of(cat, gens[j].first) + ";" + name_of(cat, gens[j].second) + "] , u[" +
               name_of(cat, gens[k].first) + ";" + name_of(cat, gens[k].second) + "]");
  };
  if (cfg.samples == 0) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t k = 0; k < gens.size(); ++k) check(i, j, k);
  } else {
    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t s = 0; s < cfg.samples; ++s)
      check(rng() % gens.size(), rng() % gens.size(), rng() % gens.size());
  }
  return rep;
}

SuiteReport run_assoc_dh1(const SuiteConfig& cfg) {
  SuiteReport rep{"assoc-dh1", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), scale_dim(cfg.dmax, 3), cfg.limit);
  DH1 alg(cat);
  auto ids = ids_within(cat, cfg.dmax);
  drive(ids, 3, cfg, [&](const std::vector<ClassId>& t) {
    DH1Element a = alg.monomial(t[0], Coeff::one(cfg.q));
    DH1Element b = alg.monomial(t[1], Coeff::one(cfg.q));
    DH1Element c = alg.monomial(t[2], Coeff::one(cfg.q));
    bool ok = alg.product_u(alg.product_u(a, b), c) == alg.product_u(a, alg.product_u(b, c));
    record(rep, ok,
           "(" + name_of(cat, t[0]) + ", " + name_of(cat, t[1]) + ", " + name_of(cat, t[2]) +
               ") [element associativity failed]");
  });
  return rep;
}

SuiteReport run_assoc_dhz1(const SuiteConfig& cfg) {
  SuiteReport rep{"assoc-dhz1", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), scale_dim(cfg.dmax, 3), cfg.limit);
  DH1 alg(cat);
  auto ids = ids_within(cat, cfg.dmax);
  drive(ids, 3, cfg, [&](const std::vector<ClassId>& t) {
    DH1Element a = alg.monomial(t[0], Coeff::one(cfg.q));
    DH1Element b = alg.monomial(t[1], Coeff::one(cfg.q));
    DH1Element c = alg.monomial(t[2], Coeff::one(cfg.q));
    bool ok = alg.product_mu(alg.product_mu(a, b), c) == alg.product_mu(a, alg.product_mu(b, c));
    record(rep, ok,
           "(" + name_of(cat, t[0]) + ", " + name_of(cat, t[1]) + ", " + name_of(cat, t[2]) +
               ")");
  });
  return rep;
}

SuiteReport run_drinfeld(const SuiteConfig& cfg) {
  SuiteReport rep{"drinfeld", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), scale_dim(cfg.dmax, 2), cfg.limit);
  DH2 alg(cat);
  auto ids = ids_within(cat, cfg.dmax);
  auto kvecs = zero_one_vectors(cat.quiver().n());
  drive(ids, 2, cfg, [&](const std::vector<ClassId>& t) {
    for (const auto& alpha : kvecs)
      for (const auto& beta : kvecs) {
        auto res = alg.drinfeld_check(t[0], alpha, t[1], beta);
        record(rep, res.holds,
               "(X0=" + name_of(cat, t[0]) + ", alpha=" + dim_to_string(alpha) +
                   ", X1=" + name_of(cat, t[1]) + ", beta=" + dim_to_string(beta) + ")");
      }
  });
  return rep;
}

SuiteReport run_phi(const SuiteConfig& cfg) {
  SuiteReport rep{"phi", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), scale_dim(cfg.dmax, 2), cfg.limit);
  DH1 alg(cat);
  auto ids = ids_within(cat, cfg.dmax);
  drive(ids, 2, cfg, [&](const std::vector<ClassId>& t) {
    record(rep, alg.phi_check(t[0], t[1]),
           "(" + name_of(cat, t[0]) + ", " + name_of(cat, t[1]) + ")");
  });
  return rep;
}

SuiteReport run_ext_aggregate(const SuiteConfig& cfg) {
  SuiteReport rep{"prop32", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), scale_dim(cfg.dmax, 2), cfg.limit);
  DH2 alg(cat);
  auto ids = ids_within(cat, cfg.dmax);
  drive(ids, 4, cfg, [&](const std::vector<ClassId>& t) {
    auto res = alg.ext_aggregate_check(t[0], t[1], t[2], t[3]);
    record(rep, res.holds,
           "(A0=" + name_of(cat, t[0]) + ", A1=" + name_of(cat, t[1]) +
               ", B0=" + name_of(cat, t[2]) + ", B1=" + name_of(cat, t[3]) +
               "): lhs=" + res.lhs.to_string() + " rhs=" + res.rhs.to_string());
  });
  return rep;
}

SuiteReport run_triangular(const SuiteConfig& cfg) {
  SuiteReport rep{"triangular", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), cfg.dmax, cfg.limit);
  DH2 alg(cat);
  auto ids = ids_within(cat, cfg.dmax);
  const int n = cat.quiver().n();
  std::vector<std::pair<DimVector, DimVector>> kpairs;
  kpairs.emplace_back(dim_zero(n), dim_zero(n));
  {
    DimVector a(n, 0), b(n, 0);
    a[0] = 1;
    b[n - 1] = -1;
    kpairs.emplace_back(a, b);
  }
  drive(ids, 2, cfg, [&](const std::vector<ClassId>& t) {
    for (const auto& [alpha, beta] : kpairs) {
      DH2Key key{alpha, beta, t[0], t[1]};
      DH2Element x = alg.monomial(key, Coeff::one(cfg.q));
      bool ok = alg.from_triangular(alg.to_triangular(x)) == x;
      // and the other way around, starting from a triangular label
      DH2Triangular lbl;
      lbl[DH2TriKey{alpha, beta, t[0], t[1]}] = Coeff::one(cfg.q);
      ok = ok && alg.to_triangular(alg.from_triangular(lbl)) == lbl;
      record(rep, ok,
             "key (k=" + dim_to_string(alpha) + ", ks=" + dim_to_string(beta) + ", " +
                 name_of(cat, t[0]) + ", " + name_of(cat, t[1]) + ")");
    }
  });
  return rep;
}

SuiteReport run_k_relations(const SuiteConfig& cfg) {
  SuiteReport rep{"k-relations", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), cfg.dmax, cfg.limit);
  DH2 alg(cat);
  auto ids = ids_within(cat, cfg.dmax);
  const int n = cat.quiver().n();
  DimVector z = dim_zero(n);
  auto kvecs = zero_one_vectors(n);
  {
    DimVector neg(n, 0);
    neg[0] = -1;
    kvecs.push_back(neg);
  }
  auto K = [&](const DimVector& a) {
    return alg.monomial(DH2Key{a, z, cat.zero_id(), cat.zero_id()}, Coeff::one(cfg.q));
  };
  auto Ks = [&](const DimVector& a) {
    return alg.monomial(DH2Key{z, a, cat.zero_id(), cat.zero_id()}, Coeff::one(cfg.q));
  };

  // K-only relations: merging of indices and mutual commutation
  for (const auto& a : kvecs)
    for (const auto& b : kvecs) {
      bool ok = alg.product(K(a), K(b)) == K(dim_add(a, b)) &&
                alg.product(Ks(a), Ks(b)) == Ks(dim_add(a, b)) &&
                alg.product(Ks(a), K(b)) == alg.product(K(b), Ks(a));
      record(rep, ok, "K indices " + dim_to_string(a) + ", " + dim_to_string(b));
    }

  // commutation of u past K and Ks, twisted by the symmetric form of the grade
  drive(ids, 2, cfg, [&](const std::vector<ClassId>& t) {
    DH2Element u = alg.monomial(DH2Key{z, z, t[0], t[1]}, Coeff::one(cfg.q));
    DimVector g = dim_sub(cat.dim(t[0]), cat.dim(t[1]));
    for (const auto& b : kvecs) {
      long long s = symmetric_form(cat.quiver(), b, g);
      bool ok = alg.product(u, K(b)) ==
                alg.product(alg.product(K(b), u),
                            alg.monomial(DH2Key{z, z, cat.zero_id(), cat.zero_id()},
                                         Coeff::v_pow(cfg.q, -s)));
      bool ok2 = alg.product(u, Ks(b)) ==
                 alg.product(alg.product(Ks(b), u),
                             alg.monomial(DH2Key{z, z, cat.zero_id(), cat.zero_id()},
                                          Coeff::v_pow(cfg.q, s)));
      record(rep, ok && ok2,
             "u[" + name_of(cat, t[0]) + ";" + name_of(cat, t[1]) + "], K index " +
                 dim_to_string(b));
    }
  });
  return rep;
}

SuiteReport run_grading(const SuiteConfig& cfg) {
  SuiteReport rep{"grading", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), scale_dim(cfg.dmax, 2), cfg.limit);
  DH2 alg(cat);
  auto gens = dh2_generators(cat, cfg.dmax);
  DimVector z = dim_zero(cat.quiver().n());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      DH2Key ka{z, z, gens[i].first, gens[i].second};
      DH2Key kb{z, z, gens[j].first, gens[j].second};
      DimVector expect = dim_add(alg.grade(ka), alg.grade(kb));
      bool ok = true;
      for (const auto& [key, c] : alg.product(alg.monomial(ka, Coeff::one(cfg.q)),
                                              alg.monomial(kb, Coeff::one(cfg.q))))
        ok = ok && alg.grade(key) == expect;
      record(rep, ok,
             "u[" + name_of(cat, gens[i].first) + ";" + name_of(cat, gens[i].second) + "] * u[" +
                 name_of(cat, gens[j].first) + ";" + name_of(cat, gens[j].second) + "]");
    }
  return rep;
}

SuiteReport run_aut_crosscheck(const SuiteConfig& cfg) {
  SuiteReport rep{"aut-crosscheck", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), cfg.dmax, cfg.limit);
  for (ClassId id = 0; id < cat.size(); ++id) {
    mpz_class brute(static_cast<unsigned long>(aut_count_brute(cat.realize_class(id), cfg.limit)));
    record(rep, brute == cat.aut(id),
           name_of(cat, id) + ": brute=" + brute.get_str() + " closed=" + cat.aut(id).get_str());
  }
  return rep;
}

SuiteReport run_embeddings(const SuiteConfig& cfg) {
  SuiteReport rep{"embeddings", base_params(cfg)};
  Catalog cat(cfg.quiver, PrimeField(cfg.q), scale_dim(cfg.dmax, 2), cfg.limit);
  DH2 alg(cat);
  const RingelHall& rh = alg.classical();
  auto ids = ids_within(cat, cfg.dmax);
  const int n = cat.quiver().n();
  std::vector<DimVector> kvecs;
  kvecs.push_back(dim_zero(n));
  {
    DimVector a(n, 0);
    a[0] = 1;
    kvecs.push_back(a);
    kvecs.push_back(DimVector(n, 1));
  }

  // images of distinct monomials stay distinct
  {
    std::map<std::string, std::pair<ClassId, DimVector>> seen_p, seen_m;
    for (ClassId id : ids)
      for (const auto& a : kvecs) {
        RHElement mono = rh.monomial(id, a, Coeff::one(cfg.q));
        auto [itp, okp] =
            seen_p.try_emplace(to_text(cat, alg.embed_plus(mono)), std::make_pair(id, a));
        auto [itm, okm] =
            seen_m.try_emplace(to_text(cat, alg.embed_minus(mono)), std::make_pair(id, a));
        record(rep, okp && okm, "duplicate image of u[" + name_of(cat, id) + "] K" +
                                     dim_to_string(a));
      }
  }

  // multiplicativity on monomial pairs
  drive(ids, 2, cfg, [&](const std::vector<ClassId>& t) {
    for (const auto& a : kvecs)
      for (const auto& b : kvecs) {
        RHElement x = rh.monomial(t[0], a, Coeff::one(cfg.q));
        RHElement y = rh.monomial(t[1], b, Coeff::one(cfg.q));
        RHElement xy = rh.product(x, y);
        bool okp = alg.product(alg.embed_plus(x), alg.embed_plus(y)) == alg.embed_plus(xy);
        bool okm = alg.product(alg.embed_minus(x), alg.embed_minus(y)) == alg.embed_minus(xy);
        record(rep, okp && okm,
               "u[" + name_of(cat, t[0]) + "]K" + dim_to_string(a) + " * u[" +
                   name_of(cat, t[1]) + "]K" + dim_to_string(b));
      }
  });
  return rep;
}

}  // namespace hallforge
