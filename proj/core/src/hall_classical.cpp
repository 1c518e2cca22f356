#include "hallforge/hall_classical.hpp"

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

mpz_class exact_div(const mpz_class& num, const mpz_class& den, const char* what) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw internal_error(std::string(what) + ": division not exact");
  return q;
}

}  // namespace

mpz_class hall_g(const Catalog& cat, ClassId L, ClassId M, ClassId N, GRoute route) {
  const DimVector& dL = cat.dim(L);
  const DimVector& dM = cat.dim(M);
  const DimVector& dN = cat.dim(N);
  if (dim_add(dM, dN) != dL) return 0;

  if (route == GRoute::kAuto) {
    mpz_class slice_cost = 1;
    for (std::size_t i = 0; i < dL.size(); ++i)
      slice_cost *= gaussian_binomial(static_cast<std::uint32_t>(dL[i]),
                                      static_cast<std::uint32_t>(dN[i]), cat.field());
    mpz_class ext_cost = field_power(cat.field(), cat.ext1(M, N));
    mpz_class limit(static_cast<unsigned long>(cat.limit()));
    if (ext_cost <= slice_cost)
      route = ext_cost <= limit ? GRoute::kExt : GRoute::kSubrep;
    else
      route = slice_cost <= limit ? GRoute::kSubrep : GRoute::kExt;
  }

  if (route == GRoute::kSubrep) {
    const auto& slice = cat.g_slice(L, dN);
    auto it = slice.find({M, N});
    return it == slice.end() ? mpz_class(0) : it->second;
  }

  // count extension classes with middle L, then rescale:
  // g = |Ext(M,N)_L| * a_L / (a_M a_N |Hom(M,N)|)
  const auto& table = cat.ext_table(M, N);
  auto it = table.find(L);
  if (it == table.end()) return 0;
  mpz_class num = it->second * cat.aut(L);
  mpz_class den = cat.aut(M) * cat.aut(N) * field_power(cat.field(), cat.hom(M, N));
  return exact_div(num, den, "hall number");
}

mpz_class ext_middle_count(const Catalog& cat, ClassId M, ClassId N, ClassId L) {
  mpz_class g = hall_g(cat, L, M, N);
  if (g == 0) return 0;
  mpz_class num = g * field_power(cat.field(), cat.hom(M, N)) * cat.aut(M) * cat.aut(N);
  return exact_div(num, cat.aut(L), "extension-middle count");
}

RHElement RingelHall::monomial(ClassId m, DimVector k, Coeff c) const {
  RHElement e;
  if (!c.is_zero()) e[RHKey{m, std::move(k)}] = std::move(c);
  return e;
}

RHElement RingelHall::unit() const {
  return monomial(cat_.zero_id(), dim_zero(cat_.quiver().n()), Coeff::one(q()));
}

const RHElement& RingelHall::basis_product(ClassId m, ClassId n) const {
  auto key = std::make_pair(m, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = prod_memo_.find(key);
    if (it != prod_memo_.end()) return it->second;
  }

  // u_M u_N = v^<M,N> sum_L (|Ext(M,N)_L| / |Hom(M,N)|) u_L, with the
  // extension count rewritten through the submodule count as g a_M a_N / a_L
  RHElement out;
  Coeff twist = Coeff::v_pow(q(), cat_.euler(m, n));
  mpz_class auts = cat_.aut(m) * cat_.aut(n);
  DimVector k0 = dim_zero(cat_.quiver().n());
  for (ClassId L : cat_.ids_with_dim(dim_add(cat_.dim(m), cat_.dim(n)))) {
    mpz_class g = hall_g(cat_, L, m, n);
    if (g == 0) continue;
    Coeff c = twist * Coeff::from_rational(q(), mpq_class(g * auts) / mpq_class(cat_.aut(L)));
    if (!c.is_zero()) out[RHKey{L, k0}] = std::move(c);
  }

  std::lock_guard<std::mutex> lock(mu_);
  return prod_memo_.try_emplace(key, std::move(out)).first->second;
}

RHElement RingelHall::product(const RHElement& x, const RHElement& y) const {
  RHElement out;
  for (const auto& [ka, ca] : x)
    for (const auto& [kb, cb] : y) {
      // K_alpha walks right past u_N at the cost of the symmetric form
      Coeff scale = ca * cb * Coeff::v_pow(q(), cat_.sym(ka.k, cat_.dim(kb.m)));
      DimVector ksum = dim_add(ka.k, kb.k);
      for (const auto& [key, c] : basis_product(ka.m, kb.m)) {
        Coeff& slot = out[RHKey{key.m, ksum}];
        slot += scale * c;
        if (slot.is_zero()) out.erase(RHKey{key.m, ksum});
      }
    }
  return out;
}

std::vector<RingelHall::DeltaTerm> RingelHall::comult(const RHKey& key) const {
  std::vector<DeltaTerm> out;
  for_each_hall_entry(cat_, key.m, [&](ClassId quot, ClassId sub, const mpz_class& g) {
    // finite by construction: both tensor factors sit inside the input class
    Coeff c = Coeff::v_pow(q(), cat_.euler(quot, sub)) * Coeff::from_integer(q(), g);
    DimVector left_k = dim_add(key.k, cat_.dim(sub));
    out.push_back(DeltaTerm{RHKey{quot, std::move(left_k)}, RHKey{sub, key.k}, std::move(c)});
  });
  return out;
}

Coeff RingelHall::counit(const RHElement& x) const {
  Coeff out = Coeff::zero(q());
  for (const auto& [key, c] : x)
    if (key.m == cat_.zero_id()) out += c;
  return out;
}

Coeff RingelHall::pairing_monomial(const RHKey& a, const RHKey& b) const {
  if (a.m != b.m) return Coeff::zero(q());
  return Coeff::from_integer(q(), cat_.aut(a.m)) * Coeff::v_pow(q(), cat_.sym(a.k, b.k));
}

Coeff RingelHall::pairing(const RHElement& x, const RHElement& y) const {
  Coeff out = Coeff::zero(q());
  for (const auto& [ka, ca] : x)
    for (const auto& [kb, cb] : y) out += ca * cb * pairing_monomial(ka, kb);
  return out;
}

RingelHall::GreenResult RingelHall::green_check(ClassId M, ClassId N, ClassId Mp,
                                                ClassId Np) const {
  const std::uint32_t p = q();
  mpq_class lhs = 0;

  DimVector mid = dim_add(cat_.dim(M), cat_.dim(N));
  if (mid == dim_add(cat_.dim(Mp), cat_.dim(Np))) {
    for (ClassId L : cat_.ids_with_dim(mid)) {
      mpz_class g1 = hall_g(cat_, L, M, N);
      if (g1 == 0) continue;
      mpz_class g2 = hall_g(cat_, L, Mp, Np);
      if (g2 == 0) continue;
      lhs += mpq_class(g1 * g2) / mpq_class(cat_.aut(L));
    }
    lhs *= mpq_class(cat_.aut(M) * cat_.aut(N) * cat_.aut(Mp) * cat_.aut(Np));
  }

  mpq_class rhs = 0;
  for_each_hall_entry(cat_, M, [&](ClassId A, ClassId Ap, const mpz_class& gM) {
    for_each_hall_entry(cat_, N, [&](ClassId B, ClassId Bp, const mpz_class& gN) {
      const auto& sliceMp = cat_.g_slice(Mp, cat_.dim(B));
      auto itMp = sliceMp.find({A, B});
      if (itMp == sliceMp.end()) return;
      const auto& sliceNp = cat_.g_slice(Np, cat_.dim(Bp));
      auto itNp = sliceNp.find({Ap, Bp});
      if (itNp == sliceNp.end()) return;
      mpq_class term(gM * gN * itMp->second * itNp->second * cat_.aut(A) * cat_.aut(Ap) *
                     cat_.aut(B) * cat_.aut(Bp));
      term *= Coeff::q_pow(p, -cat_.euler(A, Bp));
      rhs += term;
    });
  });

  GreenResult res;
  res.lhs = Coeff::from_rational(p, lhs);
  res.rhs = Coeff::from_rational(p, rhs);
  res.holds = lhs == rhs;
  return res;
}

}  // namespace hallforge
