#include "hallforge/hall_derived.hpp"

#include <stdexcept>

#include "hallforge/errors.hpp"

namespace hallforge {

mpq_class DerivedKernel::curly(const ShiftedSum& x, const ShiftedSum& y) const {
  const ClassId xs[3] = {x.deg_m1, x.deg_0, x.deg_p1};
  const ClassId ys[3] = {y.deg_m1, y.deg_0, y.deg_p1};
  long long exponent = 0;  // power of q, signs alternate with the shift
  for (int i = 1; i <= 2; ++i) {
    long long e = 0;
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b) {
        ClassId xa = xs[a + 1], yb = ys[b + 1];
        if (b == a + i) e += cat_.hom(xa, yb);
        if (b == a + i + 1) e += cat_.ext1(xa, yb);
      }
    exponent += (i % 2 == 0) ? e : -e;
  }
  return Coeff::q_pow(q(), exponent);
}

mpz_class DerivedKernel::aut_shifted(const ShiftedSum& x) const {
  const ClassId xs[3] = {x.deg_m1, x.deg_0, x.deg_p1};
  mpz_class out = 1;
  long long rad = 0;
  for (int d = 0; d < 3; ++d) out *= cat_.aut(xs[d]);
  for (int d = 0; d + 1 < 3; ++d) rad += cat_.ext1(xs[d], xs[d + 1]);
  out *= field_power(cat_.field(), static_cast<std::uint64_t>(rad));
  return out;
}

long long DerivedKernel::shift_commute_exponent(int i, int j, ClassId M, ClassId N) const {
  if (i - j <= 1) throw std::invalid_argument("shift gap must exceed one");
  long long e = cat_.euler(N, M);
  return ((i - j) % 2 == 0) ? e : -e;
}

mpq_class DerivedKernel::f_one_shift(ClassId M, ClassId N, ClassId X, ClassId Y) const {
  DimVector dL = dim_sub(cat_.dim(M), cat_.dim(X));
  if (dL != dim_sub(cat_.dim(N), cat_.dim(Y))) return 0;
  if (!dim_nonneg(dL)) return 0;
  mpq_class sum = 0;
  for (ClassId L : cat_.ids_with_dim(dL)) {
    mpz_class g1 = hall_g(cat_, M, L, X);
    if (g1 == 0) continue;
    mpz_class g2 = hall_g(cat_, N, Y, L);
    if (g2 == 0) continue;
    sum += mpq_class(cat_.aut(L) * g1 * g2);
  }
  if (sum == 0) return 0;
  sum *= Coeff::q_pow(q(), -cat_.euler(Y, X));
  sum *= mpq_class(cat_.aut(X) * cat_.aut(Y)) / mpq_class(cat_.aut(M) * cat_.aut(N));
  return sum;
}

DerivedKernel::FQuad DerivedKernel::f_quad(ClassId M1, ClassId L2, ClassId N1, ClassId M2,
                                           ClassId M) const {
  FQuad out;
  out.f4 = 0;
  DimVector d4 = dim_sub(cat_.dim(M1), cat_.dim(L2));
  const DimVector& dN1 = cat_.dim(N1);
  if (dim_nonneg(d4) && dim_leq(dN1, cat_.dim(M2))) {
    const auto& slice1 = cat_.g_slice(M1, d4);
    const auto& slice2 = cat_.g_slice(M2, dN1);
    for (const auto& [qs1, g1] : slice1) {
      if (qs1.first != L2) continue;
      ClassId I4 = qs1.second;
      for (const auto& [qs2, g2] : slice2) {
        if (qs2.second != N1) continue;
        ClassId I3 = qs2.first;
        mpz_class g3 = hall_g(cat_, M, I4, I3);
        if (g3 == 0) continue;
        out.f4 += mpq_class(cat_.aut(I3) * cat_.aut(I4) * g1 * g2 * g3);
      }
    }
    if (out.f4 != 0) out.f4 /= mpq_class(cat_.aut(M1) * cat_.aut(M2));
  }
  out.f2 = out.f4 * Coeff::q_pow(q(), cat_.euler(cat_.dim(L2), cat_.dim(N1)));
  return out;
}

mpq_class DerivedKernel::h_mixed(ClassId M1, ClassId N1, ClassId L2, ClassId M2,
                                 ClassId M) const {
  const auto& table = h_mixed_all(M1, N1, L2, M2);
  auto it = table.find(M);
  return it == table.end() ? mpq_class(0) : it->second;
}

const DerivedKernel::HTable& DerivedKernel::h_mixed_all(ClassId M1, ClassId N1, ClassId L2,
                                                        ClassId M2) const {
  auto key = std::make_tuple(M1, N1, L2, M2);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = h_memo_.find(key);
    if (it != h_memo_.end()) return it->second;
  }

  HTable table;
  DimVector d4 = dim_sub(cat_.dim(M1), cat_.dim(L2));
  const DimVector& dN1 = cat_.dim(N1);
  if (dim_nonneg(d4) && dim_leq(dN1, cat_.dim(M2))) {
    const auto& slice1 = cat_.g_slice(M1, d4);
    const auto& slice2 = cat_.g_slice(M2, dN1);
    for (const auto& [qs1, g1] : slice1) {
      if (qs1.first != L2) continue;
      ClassId I4 = qs1.second;
      for (const auto& [qs2, g2] : slice2) {
        if (qs2.second != N1) continue;
        ClassId I3 = qs2.first;
        mpq_class c34(cat_.aut(I3) * cat_.aut(I4) * g1 * g2);
        DimVector dmid = dim_add(cat_.dim(I4), cat_.dim(I3));
        for (ClassId mid : cat_.ids_with_dim(dmid)) {
          mpz_class g3 = hall_g(cat_, mid, I4, I3);
          if (g3 != 0) table[mid] += c34 * mpq_class(g3);
        }
      }
    }
    if (!table.empty()) {
      mpq_class pref(cat_.aut(M1) * cat_.aut(M2) * cat_.aut(N1) * cat_.aut(L2));
      pref *= Coeff::q_pow(q(), cat_.euler(L2, N1) - cat_.euler(M1, N1) - cat_.euler(L2, M2));
      mpq_class fdiv(cat_.aut(M1) * cat_.aut(M2));
      for (auto it = table.begin(); it != table.end();) {
        it->second *= pref / (fdiv * mpq_class(cat_.aut(it->first)));
        if (it->second == 0)
          it = table.erase(it);
        else
          ++it;
      }
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  return h_memo_.try_emplace(std::move(key), std::move(table)).first->second;
}

mpq_class DerivedKernel::f_window3(ClassId L1, ClassId M1, ClassId N1, ClassId L2, ClassId M2,
                                   ClassId N2, ClassId L, ClassId M, ClassId N) const {
  mpq_class sum = 0;
  DimVector d6 = dim_sub(cat_.dim(L), cat_.dim(L1));
  DimVector d1 = dim_sub(cat_.dim(N), cat_.dim(N2));
  if (!dim_nonneg(d6) || !dim_nonneg(d1)) return 0;
  for (ClassId I6 : cat_.ids_with_dim(d6)) {
    mpz_class gL = hall_g(cat_, L, L1, I6);
    if (gL == 0) continue;
    // F^{I4 + I6[-1]}_{M1, L2[-1]} forces the class of I4, which must also
    // embed into M1 as a subobject
    DimVector d4 = dim_add(dim_sub(cat_.dim(M1), cat_.dim(L2)), cat_.dim(I6));
    if (!dim_nonneg(d4) || !dim_leq(d4, cat_.dim(M1))) continue;
    for (ClassId I1 : cat_.ids_with_dim(d1)) {
      mpz_class gN = hall_g(cat_, N, I1, N2);
      if (gN == 0) continue;
      // class bookkeeping: I3 - I1 = M2 - N1, and I3 must be a quotient of M2
      DimVector d3 = dim_add(dim_sub(cat_.dim(M2), cat_.dim(N1)), cat_.dim(I1));
      if (!dim_nonneg(d3) || !dim_leq(d3, cat_.dim(M2))) continue;
      for (ClassId I4 : cat_.ids_with_dim(d4)) {
        mpq_class fa = f_one_shift(M1, L2, I4, I6);
        if (fa == 0) continue;
        for (ClassId I3 : cat_.ids_with_dim(d3)) {
          mpq_class fb = f_one_shift(N1, M2, I1, I3);
          if (fb == 0) continue;
          mpz_class gM = hall_g(cat_, M, I4, I3);
          if (gM == 0) continue;
          sum += fb * fa * mpq_class(gL * gM * gN);
        }
      }
    }
  }
  if (sum == 0) return 0;
  return sum * Coeff::q_pow(q(), cat_.euler(L2, N1));
}

}  // namespace hallforge
