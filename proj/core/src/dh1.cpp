#include "hallforge/dh1.hpp"

#include <algorithm>

namespace hallforge {

namespace {

std::vector<ClassId> intersect_sorted(const std::vector<ClassId>& a,
                                      const std::vector<ClassId>& b) {
  std::vector<ClassId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void add_term(DH1Element& acc, ClassId m, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

DH1Element DH1::monomial(ClassId m, Coeff c) const {
  DH1Element e;
  if (!c.is_zero()) e[m] = std::move(c);
  return e;
}

DH1Element DH1::unit() const { return monomial(cat_.zero_id(), Coeff::one(q())); }

const DH1Element& DH1::basis_product_u(ClassId a, ClassId b) const {
  auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = uprod_memo_.find(key);
    if (it != uprod_memo_.end()) return it->second;
  }

  DH1Element out;
  Coeff twist = Coeff::v_pow(q(), cat_.euler(a, b));
  for (ClassId i : intersect_sorted(cat_.quot_classes(a), cat_.sub_classes(b))) {
    mpq_class inv_aut(1);
    inv_aut /= mpq_class(cat_.aut(i));
    for (const auto& [m, h] : dk_.h_mixed_all(a, i, i, b))
      add_term(out, m, twist * Coeff::from_rational(q(), h * inv_aut));
  }

  std::lock_guard<std::mutex> lock(mu_);
  return uprod_memo_.try_emplace(key, std::move(out)).first->second;
}

DH1Element DH1::product_u(const DH1Element& x, const DH1Element& y) const {
  DH1Element out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      Coeff scale = ca * cb;
      for (const auto& [m, c] : basis_product_u(a, b)) add_term(out, m, scale * c);
    }
  return out;
}

const DH1::GTable& DH1::g_all(ClassId A, ClassId B) const {
  auto key = std::make_pair(A, B);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = g_memo_.find(key);
    if (it != g_memo_.end()) return it->second;
  }

  GTable out;
  mpq_class inv_ab(1);
  inv_ab /= mpq_class(cat_.aut(A) * cat_.aut(B));
  for (ClassId i : intersect_sorted(cat_.quot_classes(A), cat_.sub_classes(B))) {
    const DimVector& di = cat_.dim(i);
    const auto& sliceA = cat_.g_slice(A, dim_sub(cat_.dim(A), di));
    const auto& sliceB = cat_.g_slice(B, di);
    for (const auto& [qsA, gA] : sliceA) {
      if (qsA.first != i) continue;
      ClassId N = qsA.second;
      for (const auto& [qsB, gB] : sliceB) {
        if (qsB.second != i) continue;
        ClassId L = qsB.first;
        long long vexp = cat_.euler(i, N) + cat_.euler(i, i) + cat_.euler(L, i) -
                         cat_.euler(L, N);
        Coeff pref = Coeff::v_pow(q(), vexp) *
                     Coeff::from_rational(
                         q(), mpq_class(cat_.aut(L) * cat_.aut(i) * cat_.aut(N) * gA * gB) *
                                  inv_ab);
        DimVector dm = dim_add(cat_.dim(N), cat_.dim(L));
        for (ClassId m : cat_.ids_with_dim(dm)) {
          mpz_class gM = hall_g(cat_, m, N, L);
          if (gM == 0) continue;
          auto it = out.find(m);
          Coeff term = pref * Coeff::from_integer(q(), gM);
          if (it == out.end()) {
            if (!term.is_zero()) out.emplace(m, std::move(term));
          } else {
            it->second += term;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      }
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  return g_memo_.try_emplace(std::move(key), std::move(out)).first->second;
}

Coeff DH1::g_structure(ClassId A, ClassId B, ClassId M) const {
  const auto& table = g_all(A, B);
  auto it = table.find(M);
  return it == table.end() ? Coeff::zero(q()) : it->second;
}

DH1Element DH1::product_mu(const DH1Element& x, const DH1Element& y) const {
  DH1Element out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      Coeff scale = ca * cb;
      for (const auto& [m, c] : g_all(a, b)) add_term(out, m, scale * c);
    }
  return out;
}

mpz_class DH1::tilde_aut(ClassId A) const {
  return cat_.aut(A) * field_power(cat_.field(), cat_.ext1(A, A));
}

DH1Element DH1::phi(const DH1Element& x) const {
  DH1Element out;
  for (const auto& [m, c] : x) {
    Coeff scale = Coeff::v_pow(q(), -cat_.euler(m, m)) * Coeff::from_integer(q(), cat_.aut(m));
    add_term(out, m, c * scale);
  }
  return out;
}

bool DH1::phi_check(ClassId A, ClassId B) const {
  DH1Element ua = monomial(A, Coeff::one(q()));
  DH1Element ub = monomial(B, Coeff::one(q()));
  DH1Element lhs = phi(product_u(ua, ub));
  DH1Element rhs = product_mu(phi(ua), phi(ub));
  return lhs == rhs;
}

}  // namespace hallforge
