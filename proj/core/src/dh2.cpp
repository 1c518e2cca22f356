#include "hallforge/dh2.hpp"

#include <algorithm>

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

std::vector<ClassId> intersect_sorted(const std::vector<ClassId>& a,
                                      const std::vector<ClassId>& b) {
  std::vector<ClassId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void add_scaled(DH2Element& acc, const DH2Element& x, const Coeff& scale) {
  for (const auto& [key, c] : x) {
    auto it = acc.find(key);
    if (it == acc.end()) {
      Coeff v = scale * c;
      if (!v.is_zero()) acc.emplace(key, std::move(v));
    } else {
      it->second += scale * c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

}  // namespace

DH2Element DH2::monomial(DH2Key key, Coeff c) const {
  DH2Element e;
  if (!c.is_zero()) e[std::move(key)] = std::move(c);
  return e;
}

DH2Element DH2::unit() const {
  DimVector z = dim_zero(cat_.quiver().n());
  return monomial(DH2Key{z, z, cat_.zero_id(), cat_.zero_id()}, Coeff::one(q()));
}

DimVector DH2::grade(const DH2Key& key) const {
  return dim_sub(cat_.dim(key.m0), cat_.dim(key.m1));
}

const DH2Element& DH2::u_product(ClassId a0, ClassId a1, ClassId b0, ClassId b1) const {
  std::array<ClassId, 4> key{a0, a1, b0, b1};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = uprod_memo_.find(key);
    if (it != uprod_memo_.end()) return it->second;
  }

  DH2Element out;
  long long base_exp = cat_.euler(a0, b0) + cat_.euler(a1, b1);
  DimVector grade_sum =
      dim_add(dim_sub(cat_.dim(a0), cat_.dim(a1)), dim_sub(cat_.dim(b0), cat_.dim(b1)));

  auto i0_range = intersect_sorted(cat_.sub_classes(b0), cat_.quot_classes(a1));
  auto i1_range = intersect_sorted(cat_.quot_classes(a0), cat_.sub_classes(b1));
  for (ClassId i0 : i0_range) {
    for (ClassId i1 : i1_range) {
      const auto& h0 = dk_.h_mixed_all(a0, i0, i1, b0);
      if (h0.empty()) continue;
      const auto& h1 = dk_.h_mixed_all(a1, i1, i0, b1);
      if (h1.empty()) continue;
      long long tw =
          cat_.euler(dim_sub(cat_.dim(i1), cat_.dim(i0)), grade_sum) + base_exp;
      mpq_class inv_aut(1);
      inv_aut /= mpq_class(cat_.aut(i0) * cat_.aut(i1));
      Coeff pref = Coeff::v_pow(q(), tw) * Coeff::from_rational(q(), inv_aut);
      DH2Key out_key;
      out_key.k = cat_.dim(i0);
      out_key.ks = cat_.dim(i1);
      for (const auto& [m0, c0] : h0)
        for (const auto& [m1, c1] : h1) {
          out_key.m0 = m0;
          out_key.m1 = m1;
          Coeff term = pref * Coeff::from_rational(q(), c0 * c1);
          auto it = out.find(out_key);
          if (it == out.end()) {
            if (!term.is_zero()) out.emplace(out_key, std::move(term));
          } else {
            it->second += term;
            if (it->second.is_zero()) out.erase(it);
          }
        }
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  return uprod_memo_.try_emplace(key, std::move(out)).first->second;
}

DH2Element DH2::product(const DH2Element& x, const DH2Element& y) const {
  DH2Element out;
  for (const auto& [ka, ca] : x)
    for (const auto& [kb, cb] : y) {
      DimVector grade_a = dim_sub(cat_.dim(ka.m0), cat_.dim(ka.m1));
      long long kexp = cat_.sym(dim_sub(kb.ks, kb.k), grade_a);
      Coeff scale = ca * cb * Coeff::v_pow(q(), kexp);
      DimVector k_shift = dim_add(ka.k, kb.k);
      DimVector ks_shift = dim_add(ka.ks, kb.ks);
      for (const auto& [ukey, uc] : u_product(ka.m0, ka.m1, kb.m0, kb.m1)) {
        DH2Key shifted{dim_add(ukey.k, k_shift), dim_add(ukey.ks, ks_shift), ukey.m0, ukey.m1};
        auto it = out.find(shifted);
        if (it == out.end()) {
          Coeff v = scale * uc;
          if (!v.is_zero()) out.emplace(std::move(shifted), std::move(v));
        } else {
          it->second += scale * uc;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  return out;
}

DH2Element DH2::embed_plus(const RHElement& x) const {
  DimVector z = dim_zero(cat_.quiver().n());
  DH2Element out;
  for (const auto& [key, c] : x) {
    DH2Element base = monomial(DH2Key{z, z, key.m, cat_.zero_id()}, Coeff::one(q()));
    if (!dim_is_zero(key.k))
      base = product(base, monomial(DH2Key{key.k, z, cat_.zero_id(), cat_.zero_id()},
                                    Coeff::one(q())));
    add_scaled(out, base, c);
  }
  return out;
}

DH2Element DH2::embed_minus(const RHElement& x) const {
  DimVector z = dim_zero(cat_.quiver().n());
  DH2Element out;
  for (const auto& [key, c] : x) {
    DH2Element base = monomial(DH2Key{z, z, cat_.zero_id(), key.m}, Coeff::one(q()));
    if (!dim_is_zero(key.k))
      base = product(base, monomial(DH2Key{z, key.k, cat_.zero_id(), cat_.zero_id()},
                                    Coeff::one(q())));
    add_scaled(out, base, c);
  }
  return out;
}

long long DH2::delta(ClassId a0, ClassId b1) const {
  return static_cast<long long>(cat_.ext1(a0, a0)) + cat_.hom(a0, b1) + cat_.ext1(b1, b1) +
         cat_.hom(b1, a0);
}

DH2Triangular DH2::expand_std_key(ClassId m0, ClassId m1) const {
  auto memo_key = std::make_pair(m0, m1);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tri_memo_.find(memo_key);
    if (it != tri_memo_.end()) return it->second;
  }

  DimVector z = dim_zero(cat_.quiver().n());
  DH2Triangular out;
  out[DH2TriKey{z, z, m0, m1}] = Coeff::one(q());

  // rewrite u_{M0 + M1[1]} = u_{M0} u_{M1[1]} - correction terms, where each
  // correction factors a nonzero map M0 -> M1 through its image and lands
  // strictly lower in the self-extension measure
  const long long measure = delta(m0, m1);
  auto i_range = intersect_sorted(cat_.quot_classes(m0), cat_.sub_classes(m1));
  for (ClassId i1 : i_range) {
    if (i1 == cat_.zero_id()) continue;
    Coeff base = Coeff::v_pow(q(), cat_.euler(cat_.dim(i1),
                                              dim_sub(cat_.dim(m0), cat_.dim(m1)))) *
                 Coeff::from_integer(q(), cat_.aut(i1));
    for (ClassId k0 : cat_.ids_with_dim(dim_sub(cat_.dim(m0), cat_.dim(i1)))) {
      mpz_class g0 = hall_g(cat_, m0, i1, k0);
      if (g0 == 0) continue;
      for (ClassId k1 : cat_.ids_with_dim(dim_sub(cat_.dim(m1), cat_.dim(i1)))) {
        mpz_class g1 = hall_g(cat_, m1, k1, i1);
        if (g1 == 0) continue;
        if (delta(k0, k1) >= measure)
          throw internal_error("triangular rewriting measure failed to decrease");
        Coeff c = base * Coeff::from_integer(q(), g0 * g1);
        DH2Triangular sub = expand_std_key(k0, k1);
        for (const auto& [tkey, tc] : sub) {
          DH2TriKey shifted{tkey.k, dim_add(tkey.ks, cat_.dim(i1)), tkey.a0, tkey.b1};
          auto it = out.find(shifted);
          if (it == out.end()) {
            Coeff v = -(c * tc);
            if (!v.is_zero()) out.emplace(std::move(shifted), std::move(v));
          } else {
            it->second -= c * tc;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      }
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  return tri_memo_.try_emplace(std::move(memo_key), std::move(out)).first->second;
}

DH2Triangular DH2::to_triangular(const DH2Element& x) const {
  DH2Triangular out;
  for (const auto& [key, c] : x) {
    for (const auto& [tkey, tc] : expand_std_key(key.m0, key.m1)) {
      DH2TriKey shifted{dim_add(tkey.k, key.k), dim_add(tkey.ks, key.ks), tkey.a0, tkey.b1};
      auto it = out.find(shifted);
      if (it == out.end()) {
        Coeff v = c * tc;
        if (!v.is_zero()) out.emplace(std::move(shifted), std::move(v));
      } else {
        it->second += c * tc;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

DH2Element DH2::from_triangular(const DH2Triangular& t) const {
  DimVector z = dim_zero(cat_.quiver().n());
  DH2Element out;
  for (const auto& [tkey, c] : t) {
    DH2Element e = monomial(DH2Key{tkey.k, tkey.ks, cat_.zero_id(), cat_.zero_id()},
                            Coeff::one(q()));
    e = product(e, monomial(DH2Key{z, z, tkey.a0, cat_.zero_id()}, Coeff::one(q())));
    e = product(e, monomial(DH2Key{z, z, cat_.zero_id(), tkey.b1}, Coeff::one(q())));
    add_scaled(out, e, c);
  }
  return out;
}

DH2::DrinfeldResult DH2::drinfeld_check(ClassId x0, const DimVector& alpha, ClassId x1,
                                        const DimVector& beta) const {
  auto da = rh_.comult(RHKey{x0, alpha});
  auto db = rh_.comult(RHKey{x1, beta});

  DrinfeldResult res;
  for (const auto& ta : da)
    for (const auto& tb : db) {
      Coeff scale = ta.coeff * tb.coeff;
      Coeff phi_l = rh_.pairing_monomial(ta.right, tb.left);
      if (!phi_l.is_zero()) {
        DH2Element term = product(embed_plus(rh_.monomial(ta.left.m, ta.left.k, Coeff::one(q()))),
                                  embed_minus(rh_.monomial(tb.right.m, tb.right.k,
                                                           Coeff::one(q()))));
        add_scaled(res.lhs, term, scale * phi_l);
      }
      Coeff phi_r = rh_.pairing_monomial(ta.left, tb.right);
      if (!phi_r.is_zero()) {
        DH2Element term = product(embed_minus(rh_.monomial(tb.left.m, tb.left.k, Coeff::one(q()))),
                                  embed_plus(rh_.monomial(ta.right.m, ta.right.k,
                                                          Coeff::one(q()))));
        add_scaled(res.rhs, term, scale * phi_r);
      }
    }
  res.holds = res.lhs == res.rhs;
  return res;
}

DH2Reduced DH2::reduce(const DH2Element& x) const {
  DH2Reduced out;
  for (const auto& [key, c] : x) {
    DH2RedKey rk{dim_sub(key.k, key.ks), key.m0, key.m1};
    auto it = out.find(rk);
    if (it == out.end()) {
      out.emplace(std::move(rk), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

DH2::AggregateResult DH2::ext_aggregate_check(ClassId a0, ClassId a1, ClassId b0,
                                              ClassId b1) const {
  mpq_class lhs = 0;
  mpq_class hom00 = Coeff::q_pow(q(), cat_.hom(a0, b0));
  mpq_class hom11 = Coeff::q_pow(q(), cat_.hom(a1, b1));
  auto i0_range = intersect_sorted(cat_.sub_classes(b0), cat_.quot_classes(a1));
  auto i1_range = intersect_sorted(cat_.quot_classes(a0), cat_.sub_classes(b1));
  for (ClassId i0 : i0_range)
    for (ClassId i1 : i1_range) {
      mpq_class s0 = 0, s1 = 0;
      for (const auto& [m0, h] : dk_.h_mixed_all(a0, i0, i1, b0)) s0 += h;
      for (const auto& [m1, h] : dk_.h_mixed_all(a1, i1, i0, b1)) s1 += h;
      if (s0 == 0 || s1 == 0) continue;
      lhs += (s0 * hom00) * (s1 * hom11) / mpq_class(cat_.aut(i0) * cat_.aut(i1));
    }

  long long rhs_exp = static_cast<long long>(cat_.ext1(a0, b0)) + cat_.hom(a0, b1) +
                      cat_.ext1(a1, b1) + cat_.hom(a1, b0);
  mpq_class rhs = Coeff::q_pow(q(), rhs_exp);

  AggregateResult res;
  res.lhs = Coeff::from_rational(q(), lhs);
  res.rhs = Coeff::from_rational(q(), rhs);
  res.holds = lhs == rhs;
  return res;
}

}  // namespace hallforge
